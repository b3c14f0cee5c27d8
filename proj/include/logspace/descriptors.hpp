#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace logspace {

// Closed catalog of named sample families.  A descriptor is what makes a
// weight evaluable on refined grids, so the set is deliberately small and
// every member has an exact pointwise formula:
//
//   const:c                     w(t) = c
//   trig-affine:a=A,b=B         w(t) = A + B*sin(t)
//   expneg:a=A,b=B              w(t) = exp(-A * t^-B)
//   exppos:a=A,b=B              w(t) = exp(+A * t^-B)
//   piecewise:t0=v0,t1=v1,...   step function, value vi on [ti, t(i+1))
//   poly-boundary:c0,c1,...     f(t) = P(e^it), complex-valued
//   lognormal:sigma=S           random samples exp(S*N(0,1)), no formula
//
// Numeric arguments accept plain literals, the token "p" (the exponent of
// the ambient space) and simple ratios such as "1/p".
struct Descriptor {
  enum class Kind { Const, TrigAffine, ExpNeg, ExpPos, Piecewise, PolyBoundary, LogNormal };

  Kind kind = Kind::Const;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double sigma = 0.0;
  std::vector<double> coeffs;                      // poly-boundary
  std::vector<std::pair<double, double>> pieces;   // piecewise (t, value), sorted
  std::string text;                                // original spelling

  // Families with a pole at t = 0 must be sampled on midpoint-shifted grids.
  bool singular_at_zero() const {
    return (kind == Kind::ExpNeg || kind == Kind::ExpPos) && b > 0.0;
  }

  // True when samples follow from the formula alone (no seed involved).
  bool deterministic() const { return kind != Kind::LogNormal; }

  bool complex_valued() const { return kind == Kind::PolyBoundary; }

  double eval_real(double t) const {
    switch (kind) {
      case Kind::Const:
        return c;
      case Kind::TrigAffine:
        return a + b * std::sin(t);
      case Kind::ExpNeg:
        return std::exp(-a * std::pow(t, -b));
      case Kind::ExpPos:
        return std::exp(a * std::pow(t, -b));
      case Kind::Piecewise: {
        double v = pieces.front().second;
        for (const auto& [start, val] : pieces) {
          if (t >= start) v = val;
        }
        return v;
      }
      case Kind::PolyBoundary:
        throw std::invalid_argument("descriptor: poly-boundary is complex-valued");
      case Kind::LogNormal:
        throw std::invalid_argument("descriptor: lognormal has no pointwise formula");
    }
    throw std::logic_error("descriptor: unreachable");
  }

  std::complex<double> eval_complex(double t) const {
    if (kind != Kind::PolyBoundary) return {eval_real(t), 0.0};
    const std::complex<double> z = std::polar(1.0, t);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
  }

  // log of the (positive) value, exact for the exp families.  Near their
  // pole those over/underflow in the value domain long before the log does.
  double eval_log_real(double t) const {
    switch (kind) {
      case Kind::ExpNeg:
        return -a * std::pow(t, -b);
      case Kind::ExpPos:
        return a * std::pow(t, -b);
      default: {
        const double v = eval_real(t);
        if (!(v > 0.0)) {
          throw std::invalid_argument("descriptor: log of a non-positive value");
        }
        return std::log(v);
      }
    }
  }
};

namespace detail {

// literal | "p" | lit/lit | lit/p | p/lit
inline double parse_value(std::string_view s, double p) {
  const auto one = [&](std::string_view v) -> double {
    if (v == "p") return p;
    std::size_t used = 0;
    const std::string owned(v);
    double x = 0.0;
    try {
      x = std::stod(owned, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("descriptor: bad numeric argument '" + owned + "'");
    }
    if (used != owned.size()) {
      throw std::invalid_argument("descriptor: bad numeric argument '" + owned + "'");
    }
    return x;
  };
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return one(s);
  const double num = one(s.substr(0, slash));
  const double den = one(s.substr(slash + 1));
  if (den == 0.0) throw std::invalid_argument("descriptor: division by zero in argument");
  return num / den;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

// Parses "name:args".  The exponent p resolves "p"-valued arguments; pass
// any positive value when the descriptor does not use it.
inline Descriptor parse_descriptor(std::string_view text, double p) {
  Descriptor d;
  d.text = std::string(text);
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view args =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  const auto named_args = [&](std::initializer_list<std::string_view> keys)
      -> std::vector<double> {
    std::vector<double> vals(keys.size(), 0.0);
    for (std::string_view item : detail::split(args, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw std::invalid_argument("descriptor: expected key=value in '" +
                                    std::string(item) + "'");
      }
      const std::string_view key = item.substr(0, eq);
      bool known = false;
      std::size_t idx = 0;
      for (std::string_view k : keys) {
        if (k == key) {
          vals[idx] = detail::parse_value(item.substr(eq + 1), p);
          known = true;
          break;
        }
        ++idx;
      }
      if (!known) {
        throw std::invalid_argument("descriptor: unknown argument '" + std::string(key) +
                                    "' for family '" + std::string(name) + "'");
      }
    }
    return vals;
  };

  if (name == "const") {
    d.kind = Descriptor::Kind::Const;
    if (args.find('=') != std::string_view::npos) {
      d.c = named_args({"c"})[0];
    } else {
      d.c = detail::parse_value(args, p);
    }
  } else if (name == "trig-affine") {
    d.kind = Descriptor::Kind::TrigAffine;
    const auto v = named_args({"a", "b"});
    d.a = v[0];
    d.b = v[1];
  } else if (name == "expneg" || name == "exppos") {
    d.kind = name == "expneg" ? Descriptor::Kind::ExpNeg : Descriptor::Kind::ExpPos;
    const auto v = named_args({"a", "b"});
    d.a = v[0];
    d.b = v[1];
  } else if (name == "piecewise") {
    d.kind = Descriptor::Kind::Piecewise;
    for (std::string_view item : detail::split(args, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw std::invalid_argument("descriptor: piecewise expects t=value pairs");
      }
      d.pieces.emplace_back(detail::parse_value(item.substr(0, eq), p),
                            detail::parse_value(item.substr(eq + 1), p));
    }
    if (d.pieces.empty()) {
      throw std::invalid_argument("descriptor: piecewise needs at least one segment");
    }
    std::sort(d.pieces.begin(), d.pieces.end());
  } else if (name == "poly-boundary" || name == "poly") {
    d.kind = Descriptor::Kind::PolyBoundary;
    for (std::string_view item : detail::split(args, ',')) {
      if (item.empty()) continue;
      d.coeffs.push_back(detail::parse_value(item, p));
    }
    if (d.coeffs.empty()) {
      throw std::invalid_argument("descriptor: poly-boundary needs coefficients");
    }
  } else if (name == "lognormal") {
    d.kind = Descriptor::Kind::LogNormal;
    if (args.find('=') != std::string_view::npos) {
      d.sigma = named_args({"sigma"})[0];
    } else {
      d.sigma = detail::parse_value(args, p);
    }
  } else {
    throw std::invalid_argument("descriptor: unknown family '" + std::string(name) + "'");
  }
  return d;
}

}  // namespace logspace
