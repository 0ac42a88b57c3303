#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "uurefine/types.hpp"

namespace uurefine {

/// Slope of the generalized leaky correction on negative inputs. Must be
/// strictly negative so that negative risk brackets map to positive
/// penalties.
struct RobustConfig {
    double lambda = -0.001;
};

void validate(const RobustConfig& cfg);

enum class Estimator { pn, uu, robust_uu };

std::string_view to_string(Estimator estimator);
Estimator estimator_from_string(std::string_view text);

/// Empirical means of the pointwise loss over each corpus under each
/// hypothetical label:
///   r_pp: pseudo-positive corpus scored against +1
///   r_pm: pseudo-positive corpus scored against -1
///   r_np: pseudo-negative corpus scored against +1
///   r_nm: pseudo-negative corpus scored against -1
struct PartialRisks {
    double r_pp = 0.0;
    double r_pm = 0.0;
    double r_np = 0.0;
    double r_nm = 0.0;
};

/// Pointwise loss of a real-valued score against a +1/-1 label. Overflow-safe
/// for any finite score.
double loss(double score, int label, LossKind kind);

/// Exact derivative of loss() with respect to the score.
double loss_grad(double score, int label, LossKind kind);

/// The closed-form risk-rewrite weights:
///   a = (1-theta_n) pi / gap,  b = theta_n (1-pi) / gap,
///   c = (1-theta_p) pi / gap,  d = theta_p (1-pi) / gap,  gap = theta_p - theta_n.
UUCoefficients compute_coefficients(const ClassPriors& priors);

/// Mean losses over both corpora for both hypothetical labels. Fixed-order
/// pairwise summation; errors on an empty corpus.
PartialRisks partial_risks(std::span<const double> scores_p, std::span<const double> scores_n,
                           LossKind kind);

/// Supervised risk pi * r_pp + (1-pi) * r_nm, treating the corpora as truly
/// labeled.
double pn_risk(const PartialRisks& pr, double pi_plus);

/// Unbiased unlabeled-unlabeled risk a r_pp - b r_pm - c r_np + d r_nm.
/// May be negative.
double uu_risk(const PartialRisks& pr, const UUCoefficients& k);

/// Generalized leaky correction: x for x > 0, lambda * x for x < 0, 0 at 0.
double leaky_correction(double x, const RobustConfig& cfg);

/// Robust variant: f(a r_pp - c r_np) + f(d r_nm - b r_pm) with f the leaky
/// correction. Non-negative for every input when lambda < 0.
double robust_uu_risk(const PartialRisks& pr, const UUCoefficients& k, const RobustConfig& cfg);

/// Gradient of a corpus-level objective with respect to each individual
/// score, in input order.
struct ScoreGradients {
    std::vector<double> positive;
    std::vector<double> negative;
};

ScoreGradients pn_score_grad(std::span<const double> scores_p, std::span<const double> scores_n,
                             LossKind kind, double pi_plus);
ScoreGradients uu_score_grad(std::span<const double> scores_p, std::span<const double> scores_n,
                             LossKind kind, const UUCoefficients& k);
ScoreGradients robust_uu_score_grad(std::span<const double> scores_p,
                                    std::span<const double> scores_n, LossKind kind,
                                    const UUCoefficients& k, const RobustConfig& cfg);

/// Objective value for the selected estimator on one batch of scores.
double objective_value(Estimator estimator, const PartialRisks& pr, const ClassPriors& priors,
                       const UUCoefficients& k, const RobustConfig& cfg);

/// Per-score gradient for the selected estimator on one batch of scores.
ScoreGradients objective_score_grad(Estimator estimator, std::span<const double> scores_p,
                                    std::span<const double> scores_n, LossKind kind,
                                    const ClassPriors& priors, const UUCoefficients& k,
                                    const RobustConfig& cfg);

} // namespace uurefine
