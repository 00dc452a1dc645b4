#pragma once

#include <vector>

namespace fipo {

/// The four sequence log-probabilities behind one preference margin:
/// policy and frozen reference, each over the chosen and rejected sequence.
struct LogProbQuad {
    double policy_chosen = 0.0;
    double policy_rejected = 0.0;
    double ref_chosen = 0.0;
    double ref_rejected = 0.0;
};

enum class LossKind { Sft, Dpo, Ipo };

struct LossConfig {
    double beta = 0.01;
    LossKind kind = LossKind::Ipo;
};

/// Preference margin: (policy_chosen - ref_chosen) - (policy_rejected - ref_rejected).
double delta(const LogProbQuad& q);

/// -log(sigmoid(beta * d)); strictly decreasing in d, always positive.
double dpo_loss(double d, double beta);

/// (d - 1/(2*beta))^2; zero exactly at d = 1/(2*beta).
double ipo_loss(double d, double beta);

/// Negative log-likelihood of the chosen sequence from its per-token
/// log-probabilities.
double sft_loss(const std::vector<double>& chosen_token_logprobs);

struct BatchLoss {
    double mean = 0.0;
    std::vector<double> per_example;
};

/// Per-example preference loss plus the batch mean. cfg.kind must be Dpo or Ipo.
BatchLoss batch_loss(const std::vector<LogProbQuad>& quads, const LossConfig& cfg);

/// SFT variant over per-example token log-probability lists. cfg.kind must be Sft.
BatchLoss batch_loss(const std::vector<std::vector<double>>& sft_inputs,
                     const LossConfig& cfg);

}  // namespace fipo
