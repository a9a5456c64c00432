#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace ccg {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kEulerGamma = 0.5772156649015329;
inline constexpr double kZeta3 = 1.2020569031595943;

// The seven group families. SU, O_ODD and O_MINUS are aliases of U, SO_ODD
// and USP respectively: the nontrivial eigen-angles have the same law, only
// the recorded trivial eigenvalues differ.
enum class GroupId { U, SU, SoOdd, OOdd, SoEven, OMinus, USp };

// Orthonormal basis family generating the rank-N projection kernel.
//   Exp:     e^{ijx},                j = 0..N-1, on [0, 2pi]
//   SinHalf: sqrt2 sin((2j+1)x/2),   j = 0..N-1, on [0, pi]
//   Cos:     1, sqrt2 cos(jx),       j = 0..N-1, on [0, pi]
//   Sin:     sqrt2 sin((j+1)x),      j = 0..N-1, on [0, pi]
enum class KernelFamily { Exp, SinHalf, Cos, Sin };

struct EnsembleSpec {
  GroupId group{};   // group as requested
  GroupId alias{};   // kernel carrier: one of U, SoOdd, SoEven, USp
  int n = 0;         // number of points of the determinantal process
  int n0 = 0;        // number of nontrivial eigenvalues
  std::vector<int> trivial;  // forced eigenvalues, each +1 or -1
  double c_g = 0.0;
  double sigma_g = 0.0;
  KernelFamily kernel{};
  double a = 0.0;    // angle interval [a, b]
  double b = 0.0;

  int rank() const { return n; }
  double interval_length() const { return b - a; }
};

// CLI tokens: u, su, so-odd, o-odd, so-even, o-minus, usp.
GroupId parse_group(std::string_view token);
std::string_view group_token(GroupId g);

const std::vector<GroupId>& all_groups();

// Builds the fully populated spec for (group, n), n >= 1.
EnsembleSpec ensemble_spec(GroupId g, int n);

// K(x, x); cheaper than kernel_eval and always real.
double kernel_diag(const EnsembleSpec& spec, double x);

// K(x, y) = sum_j phi_j(x) conj(phi_j(y)). Real except for the Exp family.
// Throws std::domain_error if x or y lies outside the spec interval.
std::complex<double> kernel_eval(const EnsembleSpec& spec, double x, double y);

// j-th orthonormal basis function, 0 <= j < rank.
std::complex<double> basis_eval(const EnsembleSpec& spec, int j, double x);

// Upper bound for sup_x K(x, x), used as the rejection envelope.
double kernel_sup_diag(const EnsembleSpec& spec);

std::string spec_to_json(const EnsembleSpec& spec);

}  // namespace ccg
