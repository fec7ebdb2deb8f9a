#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ratarc/projective.hpp"
#include "ratarc/section.hpp"
#include "ratarc/series.hpp"

namespace ratarc {

using Complex = std::complex<double>;

enum class ComponentKind { ClosedForm, TruncatedSeries, OdeLeaf };

/// Outcome of deciding whether a component value at a rational parameter is
/// a rational number with denominator at most a given cap.
struct RationalDecision {
  enum class Kind { Rational, NotRational, Indeterminate };
  Kind kind = Kind::Indeterminate;
  BigRational value;
  std::string note;
};

/// Continued-fraction reconstruction of a rational with denominator <= cap
/// from an approximation known to within error_bound. NotRational is only
/// returned when error_bound < 1/(2 cap^2), where any such rational would have
/// to be a convergent of the approximation.
RationalDecision reconstruct_rational(const BigRational& approximation, const BigRational& error_bound,
                                      const BigInt& cap);

/// One affine coordinate function f_i of an arc (1 : f_1 : ... : f_n).
struct ArcComponent {
  ComponentKind kind = ComponentKind::ClosedForm;
  std::string description;
  std::function<Complex(Complex)> value;
  std::function<Complex(Complex)> derivative;
  std::function<RationalDecision(const BigRational&, const BigInt&)> decide;
};

/// A holomorphic map from the disk |z| < r_max to P^n in the affine chart
/// x_0 = 1. Immutable after construction.
class AnalyticArc {
 public:
  AnalyticArc(std::string id, std::vector<ArcComponent> components, double r_max, bool graph_type);

  const std::string& id() const { return id_; }
  int dimension() const { return static_cast<int>(components_.size()); }
  double radius() const { return r_max_; }
  /// Component 1 is the identity z, so a rational image forces a rational parameter.
  bool graph_type() const { return graph_type_; }
  const std::vector<ArcComponent>& components() const { return components_; }
  /// phi(0) when every component value at 0 is rational.
  const std::optional<ProjectivePoint>& center() const { return center_; }

  /// (1, f_1(z), ..., f_n(z)); DomainError when |z| >= r_max.
  std::vector<Complex> eval(Complex z) const;
  /// (0, f_1'(z), ..., f_n'(z)).
  std::vector<Complex> eval_derivative(Complex z) const;

  AnalyticArc with_radius(double r_max) const;

 private:
  void check_domain(Complex z) const;

  std::string id_;
  std::vector<ArcComponent> components_;
  double r_max_;
  bool graph_type_;
  std::optional<ProjectivePoint> center_;
};

inline constexpr double kEntire = std::numeric_limits<double>::infinity();

ArcComponent polynomial_component(std::vector<BigRational> coefficients);
ArcComponent exp_component(const BigRational& lambda);
ArcComponent series_component(TruncatedSeries series, ComponentKind kind);

/// (1 : z : z^2 : ... : z^n)
AnalyticArc moment_arc(int n, double r_max = kEntire);
/// (1 : z : e^{lambda z})
AnalyticArc exp_arc(const BigRational& lambda = 1, double r_max = kEntire);
/// (1 : z : p(z)) with rational coefficients in ascending order
AnalyticArc polynomial_graph_arc(std::vector<BigRational> coefficients, double r_max = kEntire);
/// (1 : z : s(z)) with s given by its truncation
AnalyticArc series_graph_arc(TruncatedSeries series, double r_max);
/// Constant map to (1 : c_1 : ... : c_n).
AnalyticArc constant_arc(std::vector<BigRational> values);

std::vector<Complex> eval_arc(const AnalyticArc& arc, Complex z);

enum class Metric { Max, FubiniStudy };

/// ||s||(x) = |s(x)| / (max_i |x_i|)^d  (Max)  or  |s(x)| / |x|^d  (FubiniStudy).
double section_norm(const SectionPoly& s, std::span<const Complex> x, Metric metric);

/// ||phi^* s||(z).
double pullback_norm(const SectionPoly& s, const AnalyticArc& arc, Complex z, Metric metric);

/// Estimate of sup over P^n(C) of ||s||. Max metric: low-discrepancy sampling
/// of the torus |x_i| = 1 (where the sup is attained) refined by pattern ascent.
/// Fubini-Study: low-discrepancy sampling of the unit sphere, same refinement.
/// The estimate is biased low.
double sup_norm(const SectionPoly& s, Metric metric, int samples);

}  // namespace ratarc
