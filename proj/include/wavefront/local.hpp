#pragma once

// Local behaviour at P1 = (0, 0): seeds for the orbit l1(c) leaving P1 into
// the first quadrant and the orbit l0(c) entering P1 from the fourth
// quadrant, plus the asymptotic tail laws of the corresponding profiles.

#include <optional>
#include <utility>

#include "wavefront/integrate.hpp"
#include "wavefront/model.hpp"

namespace wavefront {

inline constexpr double kDefaultSeedOffset = 1e-4;

enum class Branch { Unstable /* l1 */, Stable /* l0 */ };

const char* to_string(Branch b) noexcept;

/// Which regime of the c = 0 blow-up analysis applies (q > 1 only).
enum class BlowupRegime { Case1, Case2, Case3 };

struct BlowupCase {
    BlowupRegime regime = BlowupRegime::Case1;
    /// Values of V = Y X^(-...) at the two saddles on U = 0: the outgoing
    /// (l1) one first, the incoming (l0) one second.
    double outgoing = 0.0;
    double incoming = 0.0;
};

/// Case selector for c = 0: n vs (q + 1)/2, Case2 up to a relative 1e-12.
BlowupCase blowup_case(const WaveParams& params);

/// v1, v2 = (+/- sqrt(k^2 n^2 + 4 n) - k n) / (2 n).
std::pair<double, double> blowup_case2_roots(const WaveParams& params) noexcept;

/// Saddle eigenvalues at P1 for q = 1: ((c +/- sqrt(c^2 + 4)) / 2).
std::pair<double, double> saddle_eigenvalues(double c) noexcept;

struct SeedState {
    PhasePoint point;
    Branch branch = Branch::Unstable;
    int expansion_order = 1;
    /// Rough X range in which the leading-order expansion dominates.
    double validity_radius = 0.0;
};

SeedState seed_l1(const WaveParams& params, double c, double eps = kDefaultSeedOffset);
SeedState seed_l0(const WaveParams& params, double c, double eps = kDefaultSeedOffset);

enum class TailEnd { MinusInfinity, PlusInfinity };
enum class TailKind { Exponential, Algebraic };

const char* to_string(TailEnd e) noexcept;
const char* to_string(TailKind k) noexcept;

/// f ~ C exp(-rate |xi|) (Exponential) or f ~ C |xi|^(-exponent) (Algebraic)
/// at the given end. `constant` is empty when the theory leaves it free.
struct TailLaw {
    TailEnd end = TailEnd::PlusInfinity;
    TailKind kind = TailKind::Exponential;
    double rate_or_exponent = 0.0;
    std::optional<double> constant;
};

/// Decay law of a profile at one end. Supported: l1 at -infinity, l0 at
/// +infinity, and (when |c - c_star| <= 1e-9 max(1, c_star)) the homoclinic
/// ends l1 at +infinity / l0 at -infinity. Anything else throws
/// UnsupportedCombination.
TailLaw tail_law(const WaveParams& params, double c, std::optional<double> c_star, TailEnd end, Branch branch);

struct FitWindow {
    double lo = 0.0;
    double hi = 0.0;
};

struct FitOptions {
    /// Algebraic fits measure |xi - xi0| from a virtual origin xi0 estimated
    /// by regressing f^(-1/exponent) on xi (the profile is translation
    /// invariant, so the raw origin is arbitrary).
    bool virtual_origin = true;
    std::size_t min_samples = 20;
};

struct TailFit {
    /// Fitted rate (exponential) or exponent (algebraic), same sign
    /// convention as TailLaw::rate_or_exponent.
    double measured = 0.0;
    /// C with the predicted rate/exponent pinned (algebraic) or from the
    /// free intercept (exponential).
    double constant = 0.0;
    /// RMS residual of the free log fit.
    double residual = 0.0;
    double origin = 0.0;
    std::size_t samples = 0;
};

/// Least-squares fit of ln f against xi (exponential) or ln|xi - xi0|
/// (algebraic) over samples with X > 0 inside `window`.
/// Throws InsufficientData below `min_samples` usable samples.
TailFit fit_tail(const Trajectory& traj, const TailLaw& law, FitWindow window, const FitOptions& opts = {});

/// The last (or first, for -infinity) quarter of the trajectory's xi span.
FitWindow default_window(const Trajectory& traj, TailEnd end);

}  // namespace wavefront
