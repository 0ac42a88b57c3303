#include "uurefine/risk.hpp"

#include <cmath>
#include <string>

#include "uurefine/errors.hpp"
#include "uurefine/numeric.hpp"

namespace uurefine {

namespace {

double stable_sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    double e = std::exp(z);
    return e / (1.0 + e);
}

std::vector<double> pointwise_losses(std::span<const double> scores, int label, LossKind kind) {
    std::vector<double> out;
    out.reserve(scores.size());
    for (double s : scores) out.push_back(loss(s, label, kind));
    return out;
}

void check_label(int label) {
    if (label != 1 && label != -1) {
        throw ValidationError("invalid-label",
                              "loss label must be +1 or -1, got " + std::to_string(label));
    }
}

// Slope of the leaky correction; subgradient 0 at exactly zero.
double leaky_slope(double x, const RobustConfig& cfg) {
    if (x > 0.0) return 1.0;
    if (x < 0.0) return cfg.lambda;
    return 0.0;
}

// Shared form of the uu / robust-uu score gradient. bracket_scale_* is the
// local slope of the outer correction applied to each bracket (identically 1
// for the plain uu estimator).
ScoreGradients bracketed_score_grad(std::span<const double> scores_p,
                                    std::span<const double> scores_n, LossKind kind,
                                    const UUCoefficients& k, double bracket_scale_pos,
                                    double bracket_scale_neg) {
    ScoreGradients g;
    g.positive.reserve(scores_p.size());
    g.negative.reserve(scores_n.size());
    const double np = static_cast<double>(scores_p.size());
    const double nn = static_cast<double>(scores_n.size());
    for (double s : scores_p) {
        double d_plus = loss_grad(s, +1, kind);
        double d_minus = loss_grad(s, -1, kind);
        g.positive.push_back((bracket_scale_pos * k.a * d_plus - bracket_scale_neg * k.b * d_minus) / np);
    }
    for (double s : scores_n) {
        double d_plus = loss_grad(s, +1, kind);
        double d_minus = loss_grad(s, -1, kind);
        g.negative.push_back((-bracket_scale_pos * k.c * d_plus + bracket_scale_neg * k.d * d_minus) / nn);
    }
    return g;
}

} // namespace

void validate(const RobustConfig& cfg) {
    if (!(cfg.lambda < 0.0) || !std::isfinite(cfg.lambda)) {
        throw ValidationError("config", "lambda must be a finite negative value, got " +
                                            std::to_string(cfg.lambda));
    }
}

std::string_view to_string(Estimator estimator) {
    switch (estimator) {
        case Estimator::pn: return "pn";
        case Estimator::uu: return "uu";
        case Estimator::robust_uu: return "robust-uu";
    }
    return "robust-uu";
}

Estimator estimator_from_string(std::string_view text) {
    if (text == "pn") return Estimator::pn;
    if (text == "uu") return Estimator::uu;
    if (text == "robust-uu" || text == "robust_uu") return Estimator::robust_uu;
    throw ValidationError("config", "unknown estimator \"" + std::string(text) +
                                        "\" (expected pn, uu, or robust-uu)");
}

double loss(double score, int label, LossKind kind) {
    check_label(label);
    double z = static_cast<double>(label) * score;
    switch (kind) {
        case LossKind::logistic:
            // ln(1 + exp(-z)) = max(-z, 0) + ln(1 + exp(-|z|))
            return std::max(-z, 0.0) + std::log1p(std::exp(-std::abs(z)));
        case LossKind::sigmoid:
            return stable_sigmoid(-z);
    }
    return 0.0;
}

double loss_grad(double score, int label, LossKind kind) {
    check_label(label);
    double y = static_cast<double>(label);
    double z = y * score;
    switch (kind) {
        case LossKind::logistic:
            return -y * stable_sigmoid(-z);
        case LossKind::sigmoid: {
            double s = stable_sigmoid(-z);
            return -y * s * (1.0 - s);
        }
    }
    return 0.0;
}

UUCoefficients compute_coefficients(const ClassPriors& priors) {
    const double gap = priors.theta_p() - priors.theta_n();
    if (!(gap >= priors.gap_floor())) {
        throw ValidationError("degenerate-priors",
                              "theta_p - theta_n = " + std::to_string(gap) +
                                  " is below the gap floor " +
                                  std::to_string(priors.gap_floor()));
    }
    const double pi = priors.pi_plus();
    UUCoefficients k;
    k.a = (1.0 - priors.theta_n()) * pi / gap;
    k.b = priors.theta_n() * (1.0 - pi) / gap;
    k.c = (1.0 - priors.theta_p()) * pi / gap;
    k.d = priors.theta_p() * (1.0 - pi) / gap;
    return k;
}

PartialRisks partial_risks(std::span<const double> scores_p, std::span<const double> scores_n,
                           LossKind kind) {
    if (scores_p.empty() || scores_n.empty()) {
        throw ValidationError("empty-corpus",
                              std::string("cannot compute partial risks over an empty pseudo-") +
                                  (scores_p.empty() ? "positive" : "negative") + " corpus");
    }
    PartialRisks pr;
    pr.r_pp = mean(pointwise_losses(scores_p, +1, kind));
    pr.r_pm = mean(pointwise_losses(scores_p, -1, kind));
    pr.r_np = mean(pointwise_losses(scores_n, +1, kind));
    pr.r_nm = mean(pointwise_losses(scores_n, -1, kind));
    return pr;
}

double pn_risk(const PartialRisks& pr, double pi_plus) {
    return pi_plus * pr.r_pp + (1.0 - pi_plus) * pr.r_nm;
}

double uu_risk(const PartialRisks& pr, const UUCoefficients& k) {
    return k.a * pr.r_pp - k.b * pr.r_pm - k.c * pr.r_np + k.d * pr.r_nm;
}

double leaky_correction(double x, const RobustConfig& cfg) {
    if (x > 0.0) return x;
    if (x < 0.0) return cfg.lambda * x;
    return 0.0;
}

double robust_uu_risk(const PartialRisks& pr, const UUCoefficients& k, const RobustConfig& cfg) {
    double bracket_pos = k.a * pr.r_pp - k.c * pr.r_np;
    double bracket_neg = k.d * pr.r_nm - k.b * pr.r_pm;
    return leaky_correction(bracket_pos, cfg) + leaky_correction(bracket_neg, cfg);
}

ScoreGradients pn_score_grad(std::span<const double> scores_p, std::span<const double> scores_n,
                             LossKind kind, double pi_plus) {
    ScoreGradients g;
    g.positive.reserve(scores_p.size());
    g.negative.reserve(scores_n.size());
    const double np = static_cast<double>(scores_p.size());
    const double nn = static_cast<double>(scores_n.size());
    for (double s : scores_p) g.positive.push_back(pi_plus * loss_grad(s, +1, kind) / np);
    for (double s : scores_n) g.negative.push_back((1.0 - pi_plus) * loss_grad(s, -1, kind) / nn);
    return g;
}

ScoreGradients uu_score_grad(std::span<const double> scores_p, std::span<const double> scores_n,
                             LossKind kind, const UUCoefficients& k) {
    return bracketed_score_grad(scores_p, scores_n, kind, k, 1.0, 1.0);
}

ScoreGradients robust_uu_score_grad(std::span<const double> scores_p,
                                    std::span<const double> scores_n, LossKind kind,
                                    const UUCoefficients& k, const RobustConfig& cfg) {
    PartialRisks pr = partial_risks(scores_p, scores_n, kind);
    double bracket_pos = k.a * pr.r_pp - k.c * pr.r_np;
    double bracket_neg = k.d * pr.r_nm - k.b * pr.r_pm;
    return bracketed_score_grad(scores_p, scores_n, kind, k, leaky_slope(bracket_pos, cfg),
                                leaky_slope(bracket_neg, cfg));
}

double objective_value(Estimator estimator, const PartialRisks& pr, const ClassPriors& priors,
                       const UUCoefficients& k, const RobustConfig& cfg) {
    switch (estimator) {
        case Estimator::pn: return pn_risk(pr, priors.pi_plus());
        case Estimator::uu: return uu_risk(pr, k);
        case Estimator::robust_uu: return robust_uu_risk(pr, k, cfg);
    }
    return 0.0;
}

ScoreGradients objective_score_grad(Estimator estimator, std::span<const double> scores_p,
                                    std::span<const double> scores_n, LossKind kind,
                                    const ClassPriors& priors, const UUCoefficients& k,
                                    const RobustConfig& cfg) {
    switch (estimator) {
        case Estimator::pn: return pn_score_grad(scores_p, scores_n, kind, priors.pi_plus());
        case Estimator::uu: return uu_score_grad(scores_p, scores_n, kind, k);
        case Estimator::robust_uu:
            return robust_uu_score_grad(scores_p, scores_n, kind, k, cfg);
    }
    return {};
}

} // namespace uurefine
