#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace entropic {

/// Half-width of the band around q = 1 inside which the Shannon / von Neumann
/// limit formulas replace the Tsallis expressions.
inline constexpr double kOrderSwitchBand = 1e-6;

/// Probabilities within this distance outside [0, 1] are clamped.
inline constexpr double kProbabilityClamp = 1e-12;

/// Allowed deviation of a spectrum's total weight from 1.
inline constexpr double kNormalizationTolerance = 1e-10;

/// Thrown when an argument lies outside the domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Entropy order q >= 0. Orders within kOrderSwitchBand of 1 are flagged so
/// that consumers evaluate the q -> 1 limit instead of the ratio form.
class EntropyOrder {
 public:
  explicit EntropyOrder(double q);

  static EntropyOrder von_neumann() { return EntropyOrder(1.0); }

  double value() const { return q_; }
  bool is_limit() const { return is_limit_; }

 private:
  double q_;
  bool is_limit_;
};

/// A validated probability vector (eigenvalue list).
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> probs);

  std::span<const double> probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }

 private:
  std::vector<double> probs_;
};

/// Validates x as a probability, clamping values within kProbabilityClamp of
/// the boundary. Throws DomainError otherwise.
double checked_probability(double x, const char* what = "probability");

/// x^q with the conventions 0^q = 0 for q > 0 and 0^0 = 1.
double power_q(double x, double q);

/// -x ln x, zero at x = 0.
double eta(double x);

/// Binary Shannon entropy in nats.
double binary_shannon(double x);

/// -x^q / (q - 1). Undefined inside the q -> 1 band.
double eta_q(double x, EntropyOrder q);

/// Tsallis point entropy t_q(x); binary Shannon entropy in the q -> 1 band.
double tsallis_point(double x, EntropyOrder q);

/// Derivative of tsallis_point with respect to x, for x in (0, 1).
double tsallis_point_derivative(double x, EntropyOrder q);

/// Tsallis entropy of a spectrum; von Neumann entropy in the q -> 1 band.
double tsallis_entropy(const Spectrum& s, EntropyOrder q);

/// Chain-rule conditional entropy T_q(joint) - T_q(marginal).
double conditional_tsallis(const Spectrum& joint, const Spectrum& marginal,
                           EntropyOrder q);

namespace detail {

// Unchecked variants used by closed forms whose arguments leave [0, 1]
// (for instance 1 + c - 2 lambda c lies in [0, 2]).
double eta_unchecked(double x);
double eta_q_unchecked(double x, double q);

}  // namespace detail

}  // namespace entropic
