#include "ccg/ensembles.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ccg {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

void check_in_interval(const EnsembleSpec& spec, double x) {
  if (!(x >= spec.a && x <= spec.b)) {
    std::ostringstream msg;
    msg << "angle " << x << " outside kernel interval [" << spec.a << ", "
        << spec.b << "]";
    throw std::domain_error(msg.str());
  }
}

}  // namespace

GroupId parse_group(std::string_view token) {
  if (token == "u") return GroupId::U;
  if (token == "su") return GroupId::SU;
  if (token == "so-odd") return GroupId::SoOdd;
  if (token == "o-odd") return GroupId::OOdd;
  if (token == "so-even") return GroupId::SoEven;
  if (token == "o-minus") return GroupId::OMinus;
  if (token == "usp") return GroupId::USp;
  throw std::invalid_argument("unknown group token: " + std::string(token));
}

std::string_view group_token(GroupId g) {
  switch (g) {
    case GroupId::U: return "u";
    case GroupId::SU: return "su";
    case GroupId::SoOdd: return "so-odd";
    case GroupId::OOdd: return "o-odd";
    case GroupId::SoEven: return "so-even";
    case GroupId::OMinus: return "o-minus";
    case GroupId::USp: return "usp";
  }
  throw std::logic_error("bad GroupId");
}

const std::vector<GroupId>& all_groups() {
  static const std::vector<GroupId> groups = {
      GroupId::U,      GroupId::SU,     GroupId::SoOdd, GroupId::OOdd,
      GroupId::SoEven, GroupId::OMinus, GroupId::USp};
  return groups;
}

EnsembleSpec ensemble_spec(GroupId g, int n) {
  if (n < 1) throw std::invalid_argument("ensemble_spec: n must be >= 1");
  EnsembleSpec spec;
  spec.group = g;
  spec.n = n;

  const double c_u = 2.0 * kEulerGamma + 2.0;
  const double pi2 = kPi * kPi;

  switch (g) {
    case GroupId::U:
    case GroupId::SU:
      spec.alias = GroupId::U;
      spec.n0 = n;
      spec.trivial = {};
      spec.c_g = c_u;
      spec.sigma_g = 2.0 * pi2 / 3.0;
      spec.kernel = KernelFamily::Exp;
      spec.a = 0.0;
      spec.b = kTwoPi;
      break;
    case GroupId::SoOdd:
    case GroupId::OOdd:
      spec.alias = GroupId::SoOdd;
      spec.n0 = 2 * n;
      // SO(2N+1) carries eigenvalue det A = +1; O(2N+1) is exercised through
      // its O^- coset, whose forced eigenvalue is -1.
      spec.trivial = {g == GroupId::SoOdd ? +1 : -1};
      spec.c_g = c_u + pi2 / 4.0;
      spec.sigma_g = 4.0 * pi2 / 3.0 + 14.0 * kZeta3;
      spec.kernel = KernelFamily::SinHalf;
      spec.a = 0.0;
      spec.b = kPi;
      break;
    case GroupId::SoEven:
      spec.alias = GroupId::SoEven;
      spec.n0 = 2 * n;
      spec.trivial = {};
      spec.c_g = c_u + pi2 / 12.0;
      spec.sigma_g = 4.0 * pi2 / 3.0 + 2.0 * kZeta3;
      spec.kernel = KernelFamily::Cos;
      spec.a = 0.0;
      spec.b = kPi;
      break;
    case GroupId::OMinus:
    case GroupId::USp:
      spec.alias = GroupId::USp;
      spec.n0 = 2 * n;
      spec.trivial = g == GroupId::OMinus ? std::vector<int>{+1, -1}
                                          : std::vector<int>{};
      spec.c_g = c_u + pi2 / 12.0;
      spec.sigma_g = 4.0 * pi2 / 3.0 + 2.0 * kZeta3;
      spec.kernel = KernelFamily::Sin;
      spec.a = 0.0;
      spec.b = kPi;
      break;
  }
  return spec;
}

double kernel_diag(const EnsembleSpec& spec, double x) {
  const int n = spec.n;
  switch (spec.kernel) {
    case KernelFamily::Exp:
      return static_cast<double>(n);
    case KernelFamily::SinHalf: {
      double s = 0.0;
      for (int j = 0; j < n; ++j) {
        const double v = std::sin((2 * j + 1) * 0.5 * x);
        s += v * v;
      }
      return 2.0 * s;
    }
    case KernelFamily::Cos: {
      double s = 1.0;
      for (int j = 1; j < n; ++j) {
        const double v = std::cos(j * x);
        s += 2.0 * v * v;
      }
      return s;
    }
    case KernelFamily::Sin: {
      double s = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double v = std::sin(j * x);
        s += v * v;
      }
      return 2.0 * s;
    }
  }
  throw std::logic_error("bad KernelFamily");
}

std::complex<double> kernel_eval(const EnsembleSpec& spec, double x, double y) {
  check_in_interval(spec, x);
  check_in_interval(spec, y);
  const int n = spec.n;
  switch (spec.kernel) {
    case KernelFamily::Exp: {
      const double d = x - y;
      std::complex<double> sum = 0.0;
      for (int j = 0; j < n; ++j) {
        sum += std::complex<double>(std::cos(j * d), std::sin(j * d));
      }
      return sum;
    }
    case KernelFamily::SinHalf: {
      double s = 0.0;
      for (int j = 0; j < n; ++j) {
        const double w = (2 * j + 1) * 0.5;
        s += std::sin(w * x) * std::sin(w * y);
      }
      return 2.0 * s;
    }
    case KernelFamily::Cos: {
      double s = 1.0;
      for (int j = 1; j < n; ++j) {
        s += 2.0 * std::cos(j * x) * std::cos(j * y);
      }
      return s;
    }
    case KernelFamily::Sin: {
      double s = 0.0;
      for (int j = 1; j <= n; ++j) {
        s += std::sin(j * x) * std::sin(j * y);
      }
      return 2.0 * s;
    }
  }
  throw std::logic_error("bad KernelFamily");
}

std::complex<double> basis_eval(const EnsembleSpec& spec, int j, double x) {
  if (j < 0 || j >= spec.rank()) {
    throw std::out_of_range("basis_eval: index out of range");
  }
  switch (spec.kernel) {
    case KernelFamily::Exp:
      return {std::cos(j * x), std::sin(j * x)};
    case KernelFamily::SinHalf:
      return kSqrt2 * std::sin((2 * j + 1) * 0.5 * x);
    case KernelFamily::Cos:
      return j == 0 ? 1.0 : kSqrt2 * std::cos(j * x);
    case KernelFamily::Sin:
      return kSqrt2 * std::sin((j + 1) * x);
  }
  throw std::logic_error("bad KernelFamily");
}

double kernel_sup_diag(const EnsembleSpec& spec) {
  switch (spec.kernel) {
    case KernelFamily::Exp: return static_cast<double>(spec.n);
    case KernelFamily::SinHalf: return 2.0 * spec.n;
    case KernelFamily::Cos: return 2.0 * spec.n - 1.0;
    case KernelFamily::Sin: return 2.0 * spec.n;
  }
  throw std::logic_error("bad KernelFamily");
}

std::string spec_to_json(const EnsembleSpec& spec) {
  std::ostringstream out;
  out.precision(17);
  out << "{\"group\":\"" << group_token(spec.group) << "\",\"n\":" << spec.n
      << ",\"n0\":" << spec.n0 << ",\"trivial\":[";
  for (size_t i = 0; i < spec.trivial.size(); ++i) {
    if (i) out << ",";
    out << spec.trivial[i];
  }
  out << "],\"c_g\":" << spec.c_g << ",\"sigma_g\":" << spec.sigma_g
      << ",\"interval\":[" << spec.a << "," << spec.b << "]}";
  return out.str();
}

}  // namespace ccg
