#include "gumbel2/cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gumbel2/bayes.hpp"
#include "gumbel2/censoring.hpp"
#include "gumbel2/covid_data.hpp"
#include "gumbel2/gof.hpp"
#include "gumbel2/intervals.hpp"
#include "gumbel2/mle.hpp"
#include "gumbel2/mps.hpp"
#include "gumbel2/numeric.hpp"
#include "gumbel2/sim.hpp"

namespace gumbel2 {

using Json = nlohmann::ordered_json;

std::vector<double> parse_values(std::string_view text) {
    std::vector<double> values;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string line(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::stringstream ss(line);
        std::string token;
        while (std::getline(ss, token, ',')) {
            const auto first = token.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            const auto last = token.find_last_not_of(" \t\r");
            token = token.substr(first, last - first + 1);
            char* end = nullptr;
            errno = 0;
            const double v = std::strtod(token.c_str(), &end);
            if (end != token.c_str() + token.size() || errno == ERANGE || !std::isfinite(v)) {
                throw CliError(kExitIo, "line " + std::to_string(line_no) + ": cannot parse '" + token + "'");
            }
            if (!(v > 0.0)) {
                throw CliError(kExitIo, "line " + std::to_string(line_no) + ": value " + token + " is not positive");
            }
            values.push_back(v);
        }
        if (eol == text.size()) break;
    }
    if (values.empty()) throw CliError(kExitIo, "no data values found");
    return values;
}

std::vector<double> ingest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError(kExitIo, "cannot open input file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw CliError(kExitIo, "cannot read input file '" + path + "'");
    try {
        return parse_values(buffer.str());
    } catch (const CliError& e) {
        throw CliError(e.code(), path + ": " + e.what());
    }
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"fit", "mps", "bayes", "intervals",
                                                "gof", "simulate", "censor", "plotdata"};
    return names;
}

namespace {

Json num(double x) {
    if (std::isnan(x)) return nullptr;
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return round_significant(x);
}

Json params_json(const Params& p) { return Json{{"alpha", num(p.alpha)}, {"beta", num(p.beta)}}; }

Json interval_json(const IntervalEstimate& iv) {
    return Json{{"method", to_string(iv.method)}, {"lower", num(iv.lower)}, {"upper", num(iv.upper)},
                {"length", num(iv.length())}, {"level", num(iv.level)}, {"clamped", iv.clamped}};
}

Json pair_json(const IntervalPair& p) { return Json{{"alpha", interval_json(p.alpha)}, {"beta", interval_json(p.beta)}}; }

Json fit_json(const FitReport& f) {
    const auto& h = f.observed_info;
    return Json{{"estimate", params_json(f.estimate)},
                {"objective", num(f.objective)},
                {"iterations", f.iterations},
                {"converged", f.converged},
                {"score_norm", num(f.score_norm)},
                {"observed_information", Json::array({Json::array({num(h.a11), num(h.a12)}),
                                                      Json::array({num(h.a21), num(h.a22)})})}};
}

Json vector_json(const std::vector<double>& v) {
    Json out = Json::array();
    for (double x : v) out.push_back(num(x));
    return out;
}

Json config_json(const RunConfig& c) {
    Json j;
    j["command"] = c.command;
    j["input"] = c.bundled_covid ? Json("bundled-covid") : Json(c.input);
    j["n"] = c.n;
    j["m"] = c.m;
    j["T"] = num(c.threshold);
    j["scheme"] = c.scheme;
    j["removals"] = c.removals;
    j["seed"] = c.seed;
    j["reps"] = c.reps;
    j["loss"] = c.loss;
    j["p"] = vector_json(c.p);
    j["q"] = vector_json(c.q);
    j["prior"] = vector_json(c.prior);
    j["elicit_prior"] = c.elicit_prior;
    j["truth"] = vector_json(c.truth);
    j["methods"] = c.methods;
    j["chain"] = c.chain;
    j["burn_in"] = c.burn_in;
    j["gamma"] = num(c.gamma);
    j["grid"] = c.grid;
    return j;
}

struct Output {
    Json report;
    std::vector<std::string> summary;                 // human-readable lines
    std::vector<std::pair<std::string, std::string>> tables;  // file name -> contents
};

std::vector<int> removals_for(const RunConfig& c, int n, int m) {
    const std::string& text = c.removals.empty() ? c.scheme : c.removals;
    if (c.removals.empty() && (text == "1" || text == "2" || text == "3")) {
        return removal_scheme(std::stoi(text), n, m);
    }
    return parse_removals(text);
}

// Seeds of independent pipeline stages.
enum Stream : std::uint64_t { kCensorStream = 10, kChainStream = 11, kBootStream = 12, kGofStream = 13 };

std::vector<double> load_data(const RunConfig& c) {
    if (c.bundled_covid) {
        const auto d = covid_death_rates();
        return {d.begin(), d.end()};
    }
    return ingest(c.input);
}

// Complete sample unless m is set, in which case the plan is applied to the data.
AdaptiveCensoredSample observed_sample(const RunConfig& c, const std::vector<double>& data, Json& report) {
    if (c.m == 0) {
        report["sample"] = Json{{"kind", "complete"}, {"size", data.size()}};
        return make_complete_sample(data);
    }
    CensoringPlan plan;
    plan.n = c.n == 0 ? static_cast<int>(data.size()) : c.n;
    plan.m = c.m;
    plan.threshold = std::isnan(c.threshold) ? std::numeric_limits<double>::infinity() : c.threshold;
    plan.removals = removals_for(c, plan.n, plan.m);
    auto s = censor_real_data(data, plan, derive_seed(c.seed, kCensorStream));
    std::vector<int> eff(s.effective_removals.begin(), s.effective_removals.end());
    report["sample"] = Json{{"kind", "adaptive-progressive-hybrid"},
                            {"n", plan.n},
                            {"m", plan.m},
                            {"T", num(plan.threshold)},
                            {"removals", format_removals(plan.removals)},
                            {"change_point", s.change_point},
                            {"effective_removals", format_removals(eff)},
                            {"times", vector_json(s.times)}};
    return s;
}

FitReport require_fit(FitReport f, const char* what) {
    if (!f.converged) throw CliError(kExitEstimation, std::string(what) + " did not converge");
    return f;
}

GammaPriorPair prior_for(const RunConfig& c, bool simulation, std::span<const double> data = {}) {
    if (c.elicit_prior) {
        if (simulation) throw CliError(kExitConfig, "--elicit-prior applies to observed data only");
        if (!c.prior.empty()) throw CliError(kExitConfig, "--elicit-prior and --prior are exclusive");
        try {
            return moment_matched_prior(require_fit(fit_mle(make_complete_sample({data.begin(), data.end()})),
                                                    "complete-data ML fit"));
        } catch (const std::domain_error& e) {
            throw CliError(kExitEstimation, e.what());
        }
    }
    GammaPriorPair prior = simulation ? GammaPriorPair{3.0, 2.0, 3.0, 4.0} : GammaPriorPair{0.0, 0.0, 0.0, 0.0};
    if (!c.prior.empty()) {
        if (c.prior.size() != 4) throw CliError(kExitConfig, "--prior takes four values a,b,c,d");
        prior = {c.prior[0], c.prior[1], c.prior[2], c.prior[3]};
    }
    prior.validate();
    return prior;
}

std::vector<LossFunction> losses_for(const RunConfig& c) {
    std::vector<LossFunction> out;
    const bool all = c.loss == "all";
    if (!all && c.loss != "self" && c.loss != "linex" && c.loss != "gelf") {
        throw CliError(kExitConfig, "--loss must be self, linex, gelf or all");
    }
    if (all || c.loss == "self") out.push_back(LossFunction::self());
    if (all || c.loss == "linex") {
        for (double p : c.p) out.push_back(LossFunction::linex(p));
    }
    if (all || c.loss == "gelf") {
        for (double q : c.q) out.push_back(LossFunction::gelf(q));
    }
    return out;
}

std::vector<std::string> methods_for(const RunConfig& c, const std::string& fallback) {
    std::vector<std::string> out;
    std::stringstream ss(c.methods.empty() ? fallback : c.methods);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token != "aci" && token != "boot-p" && token != "boot-t" && token != "hpd") {
            throw CliError(kExitConfig, "unknown interval method '" + token + "'");
        }
        out.push_back(token);
    }
    return out;
}

bool has(const std::vector<std::string>& v, const std::string& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::string line_for(const std::string& label, const Params& p) {
    return label + ": alpha = " + format_number(p.alpha) + ", beta = " + format_number(p.beta);
}

std::string line_for(const IntervalPair& iv) {
    return to_string(iv.alpha.method) + ": alpha [" + format_number(iv.alpha.lower) + ", " +
           format_number(iv.alpha.upper) + "], beta [" + format_number(iv.beta.lower) + ", " +
           format_number(iv.beta.upper) + "]";
}

McmcConfig chain_config(const RunConfig& c, const FitReport& start) {
    McmcConfig mc;
    mc.chain_length = c.chain;
    mc.burn_in = c.burn_in;
    std::tie(mc.proposal_sd_alpha, mc.proposal_sd_beta) = proposal_from_mle(start);
    mc.seed = derive_seed(c.seed, kChainStream);
    mc.validate();
    return mc;
}

Output run_fit(const RunConfig& c, bool spacing) {
    Output o;
    const auto data = load_data(c);
    const auto s = observed_sample(c, data, o.report);
    const auto f = require_fit(spacing ? fit_mps(s) : fit_mle(s), spacing ? "MPS fit" : "ML fit");
    o.report[spacing ? "mps" : "mle"] = fit_json(f);
    o.summary.push_back(line_for(spacing ? "MPS" : "MLE", f.estimate));
    if (!spacing) {
        o.report["loglik"] = num(f.objective);
        const auto ic = information_criteria(-f.objective, 2, s.m());
        o.report["aic"] = num(ic.aic);
        o.report["bic"] = num(ic.bic);
        o.summary.push_back("-logL = " + format_number(-f.objective) + ", AIC = " + format_number(ic.aic) +
                            ", BIC = " + format_number(ic.bic));
        const auto iv = aci(f, c.gamma);
        o.report["aci"] = pair_json(iv);
        o.summary.push_back(line_for(iv));
    } else {
        o.report["log_spacing"] = num(f.objective);
    }
    return o;
}

Output run_bayes(const RunConfig& c) {
    Output o;
    const auto data = load_data(c);
    const auto s = observed_sample(c, data, o.report);
    const auto prior = prior_for(c, false, data);
    const auto mle = require_fit(fit_mle(s), "ML fit");
    McmcConfig mc;
    try {
        mc = chain_config(c, mle);
    } catch (const std::domain_error& e) {
        throw CliError(kExitEstimation, e.what());
    }
    const auto chain = run_mh(s, prior, mc, mle.estimate);
    o.report["prior"] = Json{{"a", num(prior.a)}, {"b", num(prior.b)}, {"c", num(prior.c)}, {"d", num(prior.d)}};
    o.report["mle"] = params_json(mle.estimate);
    o.report["acceptance_rate"] = num(chain.acceptance_rate());
    Json est = Json::object();
    for (const auto& loss : losses_for(c)) {
        const auto p = bayes_estimate(chain, loss, c.burn_in);
        est[loss.name()] = params_json(p);
        o.summary.push_back(line_for(loss.name(), p));
    }
    o.report["estimates"] = est;
    const auto iv = hpd(chain, c.gamma, c.burn_in);
    o.report["hpd"] = pair_json(iv);
    o.summary.push_back(line_for(iv));
    o.summary.push_back("acceptance rate = " + format_number(chain.acceptance_rate()));
    return o;
}

Output run_intervals(const RunConfig& c) {
    Output o;
    const auto data = load_data(c);
    const auto s = observed_sample(c, data, o.report);
    const auto methods = methods_for(c, "aci,boot-p,boot-t,hpd");
    const auto mle = require_fit(fit_mle(s), "ML fit");
    o.report["mle"] = fit_json(mle);
    Json ivs = Json::object();
    auto add = [&](const std::string& key, const IntervalPair& iv) {
        ivs[key] = pair_json(iv);
        o.summary.push_back(line_for(iv));
    };
    try {
        if (has(methods, "aci")) add("aci", aci(mle, c.gamma));
        if (has(methods, "boot-p") || has(methods, "boot-t")) {
            const int B = c.reps == 0 ? 1000 : c.reps;
            const auto reps = parametric_bootstrap(s, mle, B, derive_seed(c.seed, kBootStream), c.threads);
            o.report["bootstrap"] = Json{{"B", B}, {"failures", reps.failures}};
            if (has(methods, "boot-p")) add("boot-p", boot_p_from(reps, c.gamma));
            if (has(methods, "boot-t")) add("boot-t", boot_t_from(reps, mle, c.gamma));
        }
        if (has(methods, "hpd")) {
            const auto chain = run_mh(s, prior_for(c, false, data), chain_config(c, mle), mle.estimate);
            add("hpd", hpd(chain, c.gamma, c.burn_in));
        }
    } catch (const std::domain_error& e) {
        throw CliError(kExitEstimation, e.what());
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const CliError*>(&e)) throw;
        throw CliError(kExitEstimation, e.what());
    }
    o.report["intervals"] = ivs;
    return o;
}

Output run_gof(const RunConfig& c) {
    Output o;
    const auto data = load_data(c);
    if (c.m != 0) throw CliError(kExitConfig, "gof works on complete data; drop --m");
    Json models = Json::array();
    std::ostringstream table;
    table << "model,p1,p2,neg_loglik,aic,bic,cvm,ad,p_value\n";
    std::uint64_t index = 0;
    for (auto family : {ModelFamily::GumbelII, ModelFamily::NH, ModelFamily::BurrIII, ModelFamily::IKum}) {
        // A comparator whose likelihood climbs toward the parameter boundary
        // (NH on some data) is reported with converged = false.
        const auto fit = fit_model(data, family);
        if (!fit.converged && family == ModelFamily::GumbelII) throw CliError(kExitEstimation, "GT-II fit did not converge");
        std::optional<double> p_value;
        if (c.reps > 0 && fit.converged) {
            try {
                p_value =
                    gof_pvalue(data, fit.model, c.reps, derive_seed(c.seed, kGofStream, index), c.threads).p_value;
            } catch (const std::runtime_error&) {
            }
        }
        ++index;
        auto r = gof_report(data, fit.model);
        r.p_value = p_value;
        models.push_back(Json{{"model", to_string(family)},
                              {"p1", num(r.model.p1)},
                              {"p2", num(r.model.p2)},
                              {"converged", fit.converged},
                              {"neg_loglik", num(r.neg_loglik)},
                              {"aic", num(r.aic)},
                              {"bic", num(r.bic)},
                              {"cvm", num(r.cvm)},
                              {"ad", num(r.ad)},
                              {"p_value", p_value ? num(*p_value) : Json(nullptr)}});
        table << to_string(family) << ',' << format_number(r.model.p1) << ',' << format_number(r.model.p2) << ','
              << format_number(r.neg_loglik) << ',' << format_number(r.aic) << ',' << format_number(r.bic) << ','
              << format_number(r.cvm) << ',' << format_number(r.ad) << ','
              << (p_value ? format_number(*p_value) : std::string("NA")) << '\n';
        o.summary.push_back(to_string(family) + ": -logL = " + format_number(r.neg_loglik) +
                            ", W2 = " + format_number(r.cvm) + ", A2 = " + format_number(r.ad) +
                            (r.p_value ? ", p = " + format_number(*r.p_value) : std::string()));
    }
    o.report["sample"] = Json{{"kind", "complete"}, {"size", data.size()}};
    o.report["models"] = models;
    o.tables.emplace_back("gof.csv", table.str());
    return o;
}

Output run_simulate(const RunConfig& c) {
    Output o;
    SimulationConfig sc;
    if (c.truth.size() != 2) throw CliError(kExitConfig, "--truth takes two values alpha,beta");
    sc.truth = {c.truth[0], c.truth[1]};
    sc.replications = c.reps == 0 ? 2000 : c.reps;
    sc.linex_p = c.p;
    sc.gelf_q = c.q;
    const auto losses = losses_for(c);
    sc.self = std::any_of(losses.begin(), losses.end(), [](const auto& l) { return l.kind == LossFunction::Kind::SELF; });
    if (c.loss != "all" && c.loss != "linex") sc.linex_p.clear();
    if (c.loss != "all" && c.loss != "gelf") sc.gelf_q.clear();
    const auto methods = methods_for(c, "aci,hpd");
    sc.aci = has(methods, "aci");
    sc.boot_p = has(methods, "boot-p");
    sc.boot_t = has(methods, "boot-t");
    sc.hpd = has(methods, "hpd");
    sc.prior = prior_for(c, true);
    sc.chain_length = c.chain;
    sc.burn_in = c.burn_in;
    sc.gamma = c.gamma;
    sc.master_seed = c.seed;
    sc.threads = c.threads;
    const double T = std::isnan(c.threshold) ? 1.5 : c.threshold;
    if (c.grid) {
        for (int n : {30, 40}) {
            for (int m : {10, 15}) {
                for (int k : {1, 2, 3}) sc.plans.push_back({n, m, T, k, {}});
            }
        }
    } else {
        PlanSpec spec{c.n == 0 ? 30 : c.n, c.m == 0 ? 15 : c.m, T, 1, {}};
        const std::string& text = c.removals.empty() ? c.scheme : c.removals;
        if (c.removals.empty() && (text == "1" || text == "2" || text == "3")) {
            spec.scheme = std::stoi(text);
        } else {
            spec.scheme = 0;
            spec.removals = parse_removals(text);
        }
        sc.plans.push_back(spec);
    }
    const auto summary = run_campaign(sc);
    const auto est = summary_to_table(summary, TableKind::Estimates);
    const auto ivs = summary_to_table(summary, TableKind::Intervals);
    Json rows = Json::array();
    for (const auto& r : summary.estimators) {
        rows.push_back(Json{{"n", r.plan.n}, {"m", r.plan.m}, {"T", num(r.plan.threshold)},
                            {"scheme", r.plan.scheme_label()}, {"estimator", r.estimator},
                            {"ab_alpha", num(r.ab_alpha)}, {"mse_alpha", num(r.mse_alpha)},
                            {"ab_beta", num(r.ab_beta)}, {"mse_beta", num(r.mse_beta)},
                            {"successes", r.successes}, {"failures", r.failures}});
    }
    Json irows = Json::array();
    for (const auto& r : summary.intervals) {
        irows.push_back(Json{{"n", r.plan.n}, {"m", r.plan.m}, {"T", num(r.plan.threshold)},
                             {"scheme", r.plan.scheme_label()}, {"method", r.method},
                             {"length_alpha", num(r.length_alpha)}, {"coverage_alpha", num(r.coverage_alpha)},
                             {"length_beta", num(r.length_beta)}, {"coverage_beta", num(r.coverage_beta)},
                             {"successes", r.successes}, {"failures", r.failures}});
    }
    o.report["replications"] = sc.replications;
    o.report["estimators"] = rows;
    o.report["intervals"] = irows;
    o.tables.emplace_back("simulation_estimates.csv", est);
    o.tables.emplace_back("simulation_intervals.csv", ivs);
    o.summary.push_back(est);
    o.summary.push_back(ivs);
    return o;
}

Output run_censor(const RunConfig& c) {
    Output o;
    if (c.m == 0) throw CliError(kExitConfig, "censor needs --m");
    const auto data = load_data(c);
    const auto s = observed_sample(c, data, o.report);
    std::ostringstream table;
    table << "i,time,effective_removal\n";
    for (int i = 0; i < s.m(); ++i) {
        table << i + 1 << ',' << format_number(s.times[static_cast<std::size_t>(i)]) << ','
              << s.effective_removals[static_cast<std::size_t>(i)] << '\n';
    }
    o.tables.emplace_back("censored_sample.csv", table.str());
    o.summary.push_back("observed " + std::to_string(s.m()) + " failures, change point j = " +
                        std::to_string(s.change_point));
    return o;
}

Output run_plotdata(const RunConfig& c) {
    Output o;
    const auto data = load_data(c);
    const auto s = observed_sample(c, data, o.report);
    const auto mle = require_fit(fit_mle(s), "ML fit");
    const auto pd = plot_data(data, mle.estimate);
    std::vector<double> ga, gb;
    for (int i = 0; i <= 40; ++i) {
        const double f = std::pow(4.0, i / 40.0 - 0.5);  // [est/2, 2 est]
        ga.push_back(mle.estimate.alpha * f);
        gb.push_back(mle.estimate.beta * f);
    }
    const auto prof = profile_loglik(s, ga, gb);
    std::ostringstream pt;
    pt << "parameter,value,profile_loglik,argmax_other,ok\n";
    for (const auto& [name, rows] : {std::pair{"alpha", &prof.alpha}, std::pair{"beta", &prof.beta}}) {
        for (const auto& r : *rows) {
            pt << name << ',' << format_number(r.value) << ',' << format_number(r.profiled) << ','
               << format_number(r.argmax) << ',' << (r.ok ? 1 : 0) << '\n';
        }
    }
    o.report["mle"] = params_json(mle.estimate);
    o.report["boxplot"] = Json{{"min", num(pd.boxplot.min)},       {"q1", num(pd.boxplot.q1)},
                               {"median", num(pd.boxplot.median)}, {"q3", num(pd.boxplot.q3)},
                               {"max", num(pd.boxplot.max)},       {"mean", num(pd.boxplot.mean)}};
    o.tables.emplace_back("ecdf.csv", ecdf_csv(pd));
    o.tables.emplace_back("qq.csv", qq_csv(pd));
    o.tables.emplace_back("ttt.csv", ttt_csv(pd));
    o.tables.emplace_back("boxplot.csv", boxplot_csv(pd));
    o.tables.emplace_back("profile.csv", pt.str());
    o.summary.push_back(line_for("MLE", mle.estimate));
    return o;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw CliError(kExitIo, "cannot write '" + path.string() + "'");
    f << contents;
    f.close();
    if (!f) throw CliError(kExitIo, "failed writing '" + path.string() + "'");
}

void validate(const RunConfig& c) {
    if (!has(command_names(), c.command)) throw CliError(kExitConfig, "unknown command '" + c.command + "'");
    if (c.command != "simulate" && c.bundled_covid == !c.input.empty()) {
        throw CliError(kExitConfig, "give exactly one of --input or --bundled-covid");
    }
    if (c.n < 0 || c.m < 0) throw CliError(kExitConfig, "--n and --m must be nonnegative");
    if (c.reps < 0) throw CliError(kExitConfig, "--reps must be nonnegative");
    if (!(c.gamma > 0.0 && c.gamma < 1.0)) throw CliError(kExitConfig, "--gamma must lie in (0,1)");
    if (c.chain < 1 || c.burn_in < 0 || c.burn_in >= c.chain) {
        throw CliError(kExitConfig, "need --chain >= 1 and 0 <= --burn-in < --chain");
    }
}

}  // namespace

int dispatch(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    Output o;
    try {
        if (cfg.command == "fit") o = run_fit(cfg, false);
        else if (cfg.command == "mps") o = run_fit(cfg, true);
        else if (cfg.command == "bayes") o = run_bayes(cfg);
        else if (cfg.command == "intervals") o = run_intervals(cfg);
        else if (cfg.command == "gof") o = run_gof(cfg);
        else if (cfg.command == "simulate") o = run_simulate(cfg);
        else if (cfg.command == "censor") o = run_censor(cfg);
        else o = run_plotdata(cfg);
    } catch (const CliError&) {
        throw;
    } catch (const EvaluationError& e) {
        throw CliError(kExitEstimation, e.what());
    } catch (const std::invalid_argument& e) {
        throw CliError(kExitConfig, e.what());
    } catch (const std::domain_error& e) {
        throw CliError(kExitEstimation, e.what());
    } catch (const std::runtime_error& e) {
        throw CliError(kExitEstimation, e.what());
    }

    Json report;
    report["command"] = cfg.command;
    report["config"] = config_json(cfg);
    for (auto& [k, v] : o.report.items()) report[k] = v;
    const std::string text = report.dump(2) + "\n";

    if (cfg.out.empty()) {
        out << text;
        return kExitOk;
    }
    std::error_code ec;
    std::filesystem::create_directories(cfg.out, ec);
    if (ec) throw CliError(kExitIo, "cannot create output directory '" + cfg.out + "': " + ec.message());
    const std::filesystem::path dir(cfg.out);
    write_file(dir / (cfg.command + "_report.json"), text);
    for (const auto& [name, contents] : o.tables) write_file(dir / name, contents);
    for (const auto& line : o.summary) out << line << (line.ends_with('\n') ? "" : "\n");
    return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Gumbel type-II lifetime analysis under adaptive progressive hybrid censoring"};
    app.set_config("--config", "", "TOML/INI file mirroring the long flags; flags override it");
    std::string commands;
    for (const auto& name : command_names()) commands += (commands.empty() ? "" : "|") + name;
    app.add_option("command", c.command, commands)->required();
    app.add_option("--input", c.input, "data file (comma- or newline-separated positive values)");
    app.add_flag("--bundled-covid", c.bundled_covid, "use the bundled Covid-19 death-rate dataset");
    app.add_option("--n", c.n, "units on test (default: data size, or 30 for simulate)");
    app.add_option("--m", c.m, "observed failures (0: complete sample; simulate default 15)");
    app.add_option("--T", c.threshold, "threshold time (default: inf for data, 1.5 for simulate)");
    app.add_option("--scheme", c.scheme, "1|2|3 or a run-length removal vector such as 0*39,50");
    app.add_option("--removals", c.removals, "explicit removal vector; overrides --scheme");
    app.add_option("--seed", c.seed, "master seed");
    app.add_option("--reps", c.reps, "simulation replications or bootstrap size");
    app.add_option("--loss", c.loss, "self|linex|gelf|all");
    app.add_option("--p", c.p, "LINEX shapes")->delimiter(',');
    app.add_option("--q", c.q, "GELF shapes")->delimiter(',');
    app.add_option("--prior", c.prior, "gamma hyper-parameters a,b,c,d")->delimiter(',')->expected(4);
    app.add_flag("--elicit-prior", c.elicit_prior,
                 "gamma priors matching the complete-data ML estimate and its variance");
    app.add_option("--truth", c.truth, "simulation truth alpha,beta")->delimiter(',')->expected(2);
    app.add_option("--methods", c.methods, "interval methods, e.g. aci,boot-p,boot-t,hpd");
    app.add_option("--chain", c.chain, "MCMC chain length");
    app.add_option("--burn-in", c.burn_in, "MCMC burn-in");
    app.add_option("--gamma", c.gamma, "one minus the interval level");
    app.add_flag("--grid", c.grid, "simulate the full {30,40} x {10,15} x schemes 1-3 grid");
    app.add_option("--threads", c.threads, "worker threads (0: all cores)");
    app.add_option("--out", c.out, "output directory (default: JSON report on stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitConfig;
    }
    try {
        return dispatch(c, out);
    } catch (const CliError& e) {
        err << "error: " << e.what() << "\n";
        if (e.code() == kExitConfig) err << app.help();
        return e.code();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitEstimation;
    }
}

}  // namespace gumbel2
