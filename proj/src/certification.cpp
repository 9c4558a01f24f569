#include "hbt/certification.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>

#include "hbt/errors.hpp"
#include "hbt/io.hpp"
#include "hbt/parallel.hpp"

namespace hbt {

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::HausdorffYoung: return "hausdorff_young";
    case Suite::Young: return "young";
    case Suite::BanachL1: return "banach_l1";
  }
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  if (name == "hausdorff_young") return Suite::HausdorffYoung;
  if (name == "young") return Suite::Young;
  if (name == "banach_l1") return Suite::BanachL1;
  throw InvalidConfig("unknown certification suite '" + std::string(name) + "'");
}

namespace {

double uniform(std::mt19937_64& engine, double lo, double hi) {
  const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double round6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return std::strtod(buf, nullptr);
}

}  // namespace

FunctionSpec draw_corpus_member(std::mt19937_64& engine) {
  FunctionSpec spec;
  const auto kind = engine() % 4;
  switch (kind) {
    case 0:
      spec.family = TestFamily::Gaussian;
      spec.params = {round6(uniform(engine, 1.0, 2.0))};
      break;
    case 1:
      spec.family = TestFamily::Bump;
      spec.params = {round6(uniform(engine, 9.0, 10.0)), 20.0};
      break;
    case 2:
      spec.family = TestFamily::HermiteGaussian;
      spec.params = {static_cast<double>(engine() % 7)};
      break;
    default:
      spec.family = TestFamily::RandomBandlimited;
      spec.params = {static_cast<double>(engine() % 100000), static_cast<double>(1 + engine() % 8)};
      break;
  }
  spec.scale = round6(std::exp(uniform(engine, std::log(0.25), std::log(4.0))));
  return spec;
}

CertificationResult run_certification(const TransformPlan& plan, const CertificationOptions& options) {
  if (options.trials < 1) throw InvalidConfig("trials must be at least 1");
  if (options.tolerance && !(*options.tolerance > 0.0)) throw InvalidConfig("inequality tolerance must be positive");

  const auto trials = static_cast<std::size_t>(options.trials);
  const std::vector<ExponentTriple> triples = standard_triples();
  std::vector<std::vector<InequalityReport>> per_trial(trials);

  parallel_for(trials, options.jobs, [&](std::size_t t) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(t)};
    std::mt19937_64 engine(seq);
    const FunctionSpec fs = draw_corpus_member(engine);
    const SampledFunction f = sample(fs, plan.grid());
    auto& rows = per_trial[t];

    switch (options.suite) {
      case Suite::HausdorffYoung:
        for (double p : kHausdorffYoungExponents) {
          rows.push_back(check_hausdorff_young(plan, f, p, options.tolerance.value_or(1e-6)));
          rows.back().witness_ids = {to_string(fs)};
        }
        break;
      case Suite::Young: {
        const FunctionSpec gs = draw_corpus_member(engine);
        const SampledFunction g = sample(gs, plan.grid());
        const SampledFunction fg = convolve(plan, f, g);
        for (const ExponentTriple& triple : triples) {
          rows.push_back(young_report(f, g, fg, triple, options.tolerance.value_or(-1.0)));
          rows.back().witness_ids = {to_string(fs), to_string(gs)};
        }
        break;
      }
      case Suite::BanachL1: {
        const FunctionSpec gs = draw_corpus_member(engine);
        const SampledFunction g = sample(gs, plan.grid());
        rows.push_back(check_banach_l1(plan, f, g, options.tolerance.value_or(1e-6)));
        rows.back().witness_ids = {to_string(fs), to_string(gs)};
        break;
      }
    }
  });

  CertificationResult result;
  result.suite = options.suite;
  for (auto& rows : per_trial) {
    for (auto& row : rows) {
      if (result.rows.empty() || row.ratio > result.max_ratio) {
        result.max_ratio = row.ratio;
        result.argmax_witness = row.witness_ids;
      }
      if (!std::isnan(row.prior_ratio) && !(row.prior_ratio <= result.max_prior_ratio)) {
        result.max_prior_ratio = row.prior_ratio;
      }
      result.all_pass = result.all_pass && row.pass;
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

namespace {

std::string csv_number(double v) { return std::isnan(v) ? std::string() : format_double(v); }

std::string csv_quoted(const std::vector<std::string>& ids) {
  std::string joined;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) joined += ';';
    joined += ids[i];
  }
  std::string out = "\"";
  for (char c : joined) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_certification_csv(std::ostream& out, const CertificationResult& result) {
  out << "p,q,r,constant,lhs,rhs,ratio,prior_ratio,witness_ids,pass\n";
  for (const InequalityReport& row : result.rows) {
    const double p = row.triple ? row.triple->p : row.p;
    const double q = row.triple ? row.triple->q : std::numeric_limits<double>::quiet_NaN();
    const double r = row.triple ? row.triple->r : std::numeric_limits<double>::quiet_NaN();
    out << csv_number(p) << ',' << csv_number(q) << ',' << csv_number(r) << ',' << csv_number(row.constant) << ','
        << csv_number(row.lhs) << ',' << csv_number(row.rhs) << ',' << csv_number(row.ratio) << ','
        << csv_number(row.prior_ratio) << ',' << csv_quoted(row.witness_ids) << ','
        << (row.pass ? "true" : "false") << '\n';
  }
  out << "summary,,,,,," << csv_number(result.max_ratio) << ',' << csv_number(result.max_prior_ratio) << ','
      << csv_quoted(result.argmax_witness) << ',' << (result.all_pass ? "true" : "false") << '\n';
}

}  // namespace hbt
