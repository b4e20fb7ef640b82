#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gumbel2/models.hpp"

namespace gumbel2 {

struct InformationCriteria {
    double aic = 0.0;
    double bic = 0.0;
};

/// aic = 2k + 2 nll, bic = k ln n + 2 nll.
InformationCriteria information_criteria(double neg_loglik, int k, int n);

struct CvmAd {
    double cvm = 0.0;  ///< Cramer-von Mises W^2
    double ad = 0.0;   ///< Anderson-Darling A^2
    int clipped = 0;   ///< probabilities clipped into [1e-12, 1 - 1e-12]
};

/// With u_i = F(x_(i)):
///   W^2 = 1/(12n) + sum (u_i - (2i-1)/(2n))^2
///   A^2 = -n - (1/n) sum (2i-1) (ln u_i + ln(1 - u_{n+1-i}))
CvmAd cvm_ad(std::span<const double> data, const std::function<double(double)>& cdf);

enum class ModelFamily { GumbelII, NH, BurrIII, IKum };

std::string to_string(ModelFamily family);

/// A fitted two-parameter model; for GumbelII (p1, p2) = (alpha, beta).
struct Model {
    ModelFamily family = ModelFamily::GumbelII;
    double p1 = 1.0;
    double p2 = 1.0;
};

double model_cdf(const Model& model, double x);
double model_quantile(const Model& model, double u);
double model_loglik(const Model& model, std::span<const double> data);

struct ModelFit {
    Model model;
    double neg_loglik = 0.0;
    bool converged = false;
};

/// Complete-data maximum likelihood. GumbelII uses the Newton solver;
/// the comparator families use a Nelder-Mead simplex in log-parameters.
ModelFit fit_model(std::span<const double> data, ModelFamily family, std::optional<Model> start = std::nullopt);

struct PValueResult {
    double p_value = 0.0;
    double observed = 0.0;  ///< observed A^2
    int exceed = 0;         ///< bootstrap statistics >= observed
    int replicates = 0;     ///< successful replicates
    int failures = 0;
};

/// Parametric-bootstrap p-value of the Anderson-Darling statistic: B complete
/// samples drawn at the fitted model, each refitted, A^2 recomputed.
PValueResult gof_pvalue(std::span<const double> data, const Model& fitted, int B, std::uint64_t seed,
                        unsigned threads = 1);

struct GofReport {
    Model model;
    double neg_loglik = 0.0;
    double aic = 0.0;
    double bic = 0.0;
    double cvm = 0.0;
    double ad = 0.0;
    std::optional<double> p_value;
};

/// All goodness-of-fit measures for a model at given parameters. The
/// p-value is computed only when B > 0.
GofReport gof_report(std::span<const double> data, const Model& model, int B = 0, std::uint64_t seed = 1);

struct EcdfRow {
    double x, empirical, fitted;
};
struct QqRow {
    double theoretical, observed;
};
struct TttRow {
    double fraction, ttt;
};
struct BoxplotSummary {
    double min, q1, median, q3, max, mean;
};

struct PlotData {
    std::vector<EcdfRow> ecdf;
    std::vector<QqRow> qq;
    BoxplotSummary boxplot{};
    std::vector<TttRow> ttt;
};

/// Plot-ready tables. Quartiles use linear interpolation between order
/// statistics (position (n-1)p).
PlotData plot_data(std::span<const double> data, const Params& fitted);

std::string ecdf_csv(const PlotData& d);
std::string qq_csv(const PlotData& d);
std::string ttt_csv(const PlotData& d);
std::string boxplot_csv(const PlotData& d);

}  // namespace gumbel2
