#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wavefront/model.hpp"

namespace wavefront {

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = std::numeric_limits<double>::infinity();
    double x_max = 50.0;
    double y_max = 100.0;
    /// Longest |xi| span one integration may cover.
    double xi_budget = 1e6;
    /// Distance to P1/P2 treated as arrival when the linearization contracts.
    double converge_radius = 1e-8;
    /// Arrival at P1 along a slow (center) direction: X below this, moving
    /// toward X = 0 with |Y| = O(X).
    double arrival_x = 1e-6;
    /// Crossings are refined until |event function| <= event_tol * max(1, |X|).
    double event_tol = 1e-10;
    /// When positive, dense output fills gaps so consecutive samples are at
    /// most this far apart in xi.
    double sample_spacing = 0.0;
    std::int64_t max_steps = 5'000'000;

    void check() const;
};

enum class Direction { Forward, Backward };

enum class EventKind : std::uint8_t {
    YZeroDown,  // Y passes + -> - as xi increases
    YZeroUp,    // Y passes - -> + as xi increases
    XZero,
    Escape,
    ConvergedP1,
    ConvergedP2,
    BudgetExhausted,
};

const char* to_string(EventKind kind) noexcept;
std::optional<EventKind> event_kind_from_string(const std::string& name) noexcept;

/// Small bit set of EventKind values.
class EventSet {
public:
    constexpr EventSet() = default;
    constexpr EventSet(std::initializer_list<EventKind> kinds) {
        for (auto k : kinds) bits_ |= bit(k);
    }
    constexpr bool contains(EventKind k) const noexcept { return (bits_ & bit(k)) != 0; }
    constexpr EventSet& insert(EventKind k) noexcept {
        bits_ |= bit(k);
        return *this;
    }

private:
    static constexpr std::uint32_t bit(EventKind k) noexcept { return 1u << static_cast<unsigned>(k); }
    std::uint32_t bits_ = 0;
};

struct Event {
    EventKind kind = EventKind::BudgetExhausted;
    double xi = 0.0;
    PhasePoint point;
};

struct Sample {
    double xi = 0.0;
    double x = 0.0;
    double y = 0.0;
};

/// Discrete orbit. Samples are stored in integration order, so xi decreases
/// along a backward trajectory.
struct Trajectory {
    std::vector<Sample> samples;
    std::vector<Event> events;
    Direction direction = Direction::Forward;

    bool empty() const noexcept { return samples.empty(); }
    const Sample& front() const { return samples.front(); }
    const Sample& back() const { return samples.back(); }
    /// The event that ended the integration, if any (a span end has none).
    std::optional<Event> terminal_event() const;
    std::optional<Event> first_event(EventKind kind) const;
    std::size_t count(EventKind kind) const noexcept;
    /// Copy with samples sorted by increasing xi.
    Trajectory ascending() const;
    /// Copy with xi replaced by xi - origin.
    Trajectory shifted(double origin) const;
};

/// Integrates the profile system from `seed` in the given xi direction
/// (Backward integrates the negated field). Crossing events are always
/// recorded; YZeroDown / YZeroUp terminate only when listed in `stop_on`.
/// XZero, Escape, convergence and budget exhaustion always terminate.
/// When `span` is set the integration also stops once |xi - xi0| = span.
///
/// Throws IntegrationError on step underflow or a non-finite state.
Trajectory integrate(const WaveParams& params, double c, PhasePoint seed, Direction direction,
                     EventSet stop_on, const IntegratorConfig& cfg,
                     std::optional<double> span = std::nullopt, double xi0 = 0.0);

/// Linearly implicit Rosenbrock 2(3) integration for the slow branches of P1,
/// where the transverse mode contracts so fast that explicit steps are
/// stability bound. Runs until X >= x_exit or the orbit leaves its starting
/// quadrant (the last sample stays inside). No events are recorded.
Trajectory integrate_stiff(const WaveParams& params, double c, PhasePoint seed, Direction direction,
                           double x_exit, const IntegratorConfig& cfg, double xi0 = 0.0);

/// Integrates forward over `span`, then backward over the same span, and
/// returns the distance between the seed and the returned state.
double roundtrip_check(const WaveParams& params, double c, PhasePoint seed, double span,
                       const IntegratorConfig& cfg);

/// CSV with header `xi,x,y`, 15 significant digits, events appended as
/// `# event,kind,xi,x,y` comment lines.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
Trajectory read_trajectory_csv(std::istream& is);

}  // namespace wavefront
