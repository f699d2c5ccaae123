#include "opcalc/catalog.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

#include "opcalc/errors.hpp"

namespace opcalc {

namespace {

constexpr double kGaussBandHalfWidths = 7.0;

cplx i_pow(int n) {
  switch (n & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  return parts;
}

double parse_double(const std::string& text, std::string_view context) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  while (begin < end && *begin == ' ') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    fail(ErrorKind::ParseError, "bad number '" + text + "' in " + std::string(context));
  }
  return value;
}

}  // namespace

ScalarFunction polynomial(std::vector<double> coeffs, std::string name_override) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  std::ostringstream name;
  name << "poly:";
  for (std::size_t i = 0; i < coeffs.size(); ++i) name << (i ? "," : "") << coeffs[i];
  if (!name_override.empty()) name.str(name_override);
  auto eval = [coeffs](double x, int n) -> cplx {
    // Horner on the n-th derivative's coefficients.
    double acc = 0.0;
    for (std::size_t i = coeffs.size(); i-- > static_cast<std::size_t>(n);) {
      double falling = 1.0;
      for (int j = 0; j < n; ++j) falling *= static_cast<double>(i - j);
      acc = acc * x + coeffs[i] * falling;
    }
    return {acc, 0.0};
  };
  return ScalarFunction(name.str(), eval, kCatalogMaxOrder, true);
}

ScalarFunction monomial(int degree) {
  std::vector<double> coeffs(static_cast<std::size_t>(degree) + 1, 0.0);
  coeffs.back() = 1.0;
  const char* name = degree == 2 ? "sq" : degree == 3 ? "cube" : "";
  return polynomial(std::move(coeffs), name);
}

ScalarFunction exponential() {
  return ScalarFunction("exp", [](double x, int) { return cplx(std::exp(x), 0.0); },
                        kCatalogMaxOrder, true);
}

ScalarFunction sine() {
  return ScalarFunction(
      "sin", [](double x, int n) { return cplx(std::sin(x + 0.5 * kPi * n), 0.0); },
      kCatalogMaxOrder, true);
}

ScalarFunction cosine() {
  return ScalarFunction(
      "cos", [](double x, int n) { return cplx(std::cos(x + 0.5 * kPi * n), 0.0); },
      kCatalogMaxOrder, true);
}

ScalarFunction exp_i(double xi) {
  std::ostringstream name;
  name << "expi:" << xi;
  ScalarFunction f(
      name.str(),
      [xi](double x, int n) { return i_pow(n) * std::pow(xi, n) * std::exp(cplx(0.0, xi * x)); },
      kCatalogMaxOrder, xi == 0.0);
  f.lipschitz_bound = std::abs(xi);
  f.wiener = DiscreteWienerMeasure{{{xi, {1.0, 0.0}}}};
  f.band = BandInfo{xi, xi, xi >= 0.0 ? BandType::positive_half : BandType::symmetric};
  return f;
}

ScalarFunction wiener_function(const DiscreteWienerMeasure& measure) {
  std::ostringstream name;
  name << "wiener:";
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t j = 0; j < measure.atoms.size(); ++j) {
    const auto& a = measure.atoms[j];
    name << (j ? "," : "") << a.xi << ':' << a.weight.real() << ':' << a.weight.imag();
    lo = j ? std::min(lo, a.xi) : a.xi;
    hi = j ? std::max(hi, a.xi) : a.xi;
  }
  ScalarFunction f(
      name.str(),
      [atoms = measure.atoms](double x, int n) {
        cplx acc{0.0, 0.0};
        for (const auto& a : atoms) acc += a.weight * std::pow(a.xi, n) * std::exp(cplx(0.0, a.xi * x));
        return i_pow(n) * acc;
      },
      kCatalogMaxOrder, false);
  f.lipschitz_bound = measure.moment(1);
  f.wiener = measure;
  if (!measure.atoms.empty()) {
    f.band = BandInfo{lo, hi, lo >= 0.0 ? BandType::positive_half : BandType::symmetric};
  }
  return f;
}

ScalarFunction gauss_band(double center, double width) {
  if (!(width > 0.0)) fail(ErrorKind::DomainError, "gauss-band width must be positive");
  std::ostringstream name;
  name << "gauss-band:" << center << ',' << width;
  const double w2 = width * width;
  ScalarFunction f(
      name.str(),
      [center, w2](double x, int n) {
        // f' = q' f with q' = -w^2 x + i c, q'' = -w^2, hence
        // f^{(m+1)} = q' f^{(m)} - m w^2 f^{(m-1)}.
        const cplx base = std::exp(cplx(-0.5 * w2 * x * x, center * x));
        const cplx qp(-w2 * x, center);
        cplx prev{0.0, 0.0};
        cplx cur = base;
        for (int m = 0; m < n; ++m) {
          cplx next = qp * cur - static_cast<double>(m) * w2 * prev;
          prev = cur;
          cur = next;
        }
        return cur;
      },
      kCatalogMaxOrder, center == 0.0);
  const double lo = center - kGaussBandHalfWidths * width;
  const double hi = center + kGaussBandHalfWidths * width;
  f.band = BandInfo{lo, hi, lo >= 0.0 ? BandType::positive_half : BandType::symmetric};
  return f;
}

ScalarFunction make_function(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string head(spec.substr(0, colon));
  const std::string args = colon == std::string_view::npos ? "" : std::string(spec.substr(colon + 1));
  const bool has_args = colon != std::string_view::npos;

  if (!has_args) {
    if (head == "sq") return monomial(2);
    if (head == "cube") return monomial(3);
    if (head == "exp") return exponential();
    if (head == "sin") return sine();
    if (head == "cos") return cosine();
  } else if (head == "poly") {
    std::vector<double> coeffs;
    for (const auto& part : split(args, ',')) coeffs.push_back(parse_double(part, spec));
    return polynomial(std::move(coeffs));
  } else if (head == "expi") {
    return exp_i(parse_double(args, spec));
  } else if (head == "wiener") {
    DiscreteWienerMeasure m;
    if (!args.empty()) {
      for (const auto& atom : split(args, ',')) {
        auto fields = split(atom, ':');
        if (fields.size() < 2 || fields.size() > 3) {
          fail(ErrorKind::ParseError, "wiener atom must be xi:re[:im], got '" + atom + "'");
        }
        const double im = fields.size() == 3 ? parse_double(fields[2], spec) : 0.0;
        m.atoms.push_back({parse_double(fields[0], spec), {parse_double(fields[1], spec), im}});
      }
    }
    return wiener_function(m);
  } else if (head == "gauss-band") {
    auto fields = split(args, ',');
    if (fields.size() != 2) fail(ErrorKind::ParseError, "gauss-band needs <center,width>");
    return gauss_band(parse_double(fields[0], spec), parse_double(fields[1], spec));
  }
  fail(ErrorKind::ParseError, "unknown function '" + std::string(spec) + "'");
}

std::vector<std::string_view> default_catalog_names() {
  return {"sq", "cube", "exp", "sin", "poly:0.5,-1,0.25,0.1", "expi:1", "expi:-2.5",
          "wiener:1:0.5:0.2,-2:0.3:0,3.5:-0.1:0.05", "gauss-band:2,0.5"};
}

}  // namespace opcalc
