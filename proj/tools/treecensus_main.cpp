// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0
//
// treecensus: exact and asymptotic enumeration of degree-bounded trees.
//
// Subcommands:
//   census        exact p_n, r_n, t_n tables
//   distribution  exact distribution of a marked statistic at order n
//   constants     asymptotic x0, mu, sigma for a marking (JSON)
//   indices       general Zagreb / Randic constants with finite-n comparisons
//   certify       census distributions vs. the brute-force tree oracle
//   tau           subexponential trace t_n x0^n n^(5/2) and its extrapolation
//
// Exit codes: 0 ok, 1 certification failure, 2 usage, 3 resource, 4 precision.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treecensus/treecensus.hpp"

namespace tc = treecensus;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitCertification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitPrecision = 4;

int default_precision() {
  if (const char* env = std::getenv("TREECENSUS_PRECISION")) {
    int p = std::atoi(env);
    if (p >= 10) return p;
  }
  return 50;
}

tc::Marking parse_marking(const std::string& spec) {
  if (spec == "none") return tc::Marking::none();
  if (spec.rfind("degree:", 0) == 0) {
    return tc::Marking::degree(std::stoi(spec.substr(7)));
  }
  if (spec.rfind("edge:", 0) == 0) {
    std::string rest = spec.substr(5);
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw tc::DomainError("edge marking needs two degrees: " + spec);
    return tc::Marking::edge(std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1)));
  }
  throw tc::DomainError("unrecognized marking '" + spec + "' (use none, degree:J or edge:I,J)");
}

/// Marks list: "all" or comma-separated specs; "edge:I,J" keeps its inner
/// comma, so a bare numeric token re-attaches to the preceding edge spec.
std::vector<tc::Marking> parse_marks_list(const std::string& arg, int delta) {
  std::vector<tc::Marking> out;
  if (arg == "all") {
    for (int j = 1; j <= delta; ++j) out.push_back(tc::Marking::degree(j));
    for (int i = 1; i <= delta; ++i)
      for (int j = i; j <= delta; ++j) out.push_back(tc::Marking::edge(i, j));
    return out;
  }
  std::vector<std::string> tokens;
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) tokens.push_back(tok);
  for (size_t i = 0; i < tokens.size(); ++i) {
    std::string spec = tokens[i];
    if (spec.rfind("edge:", 0) == 0 && spec.find(',') == std::string::npos && i + 1 < tokens.size()) {
      spec += "," + tokens[++i];
    }
    out.push_back(parse_marking(spec));
  }
  return out;
}

struct OutputSink {
  std::ostream* os = &std::cout;
  std::ofstream file;
  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw tc::DomainError("cannot open output file " + path);
    os = &file;
  }
  std::ostream& stream() { return *os; }
};

std::string real_str(const tc::Real& v, int digits) { return tc::format_real(v, digits); }

// ---------------------------------------------------------------------------

int cmd_census(int delta, int order, const std::string& format, OutputSink& sink) {
  tc::census::CensusTables tables = tc::census::build_free(tc::DegreeBound(delta), order);
  auto& os = sink.stream();
  auto num = [](const tc::Rational& q) { return q.get_num().get_str(); };
  if (format == "json") {
    json rows = json::array();
    for (int n = 1; n <= order; ++n) {
      rows.push_back(json{{"n", n},
                          {"p", num(tables.p[n])},
                          {"r", num(tables.r[n])},
                          {"t", num(tables.t[n])}});
    }
    json doc{{"delta", delta}, {"order", order}, {"rows", rows}};
    os << doc.dump(2) << "\n";
  } else {
    os << "n,p_n,r_n,t_n\n";
    for (int n = 1; n <= order; ++n)
      os << n << "," << num(tables.p[n]) << "," << num(tables.r[n]) << "," << num(tables.t[n])
         << "\n";
  }
  return 0;
}

int cmd_distribution(int delta, const std::string& mark_spec, int n, int prec, OutputSink& sink) {
  tc::Marking mark = parse_marking(mark_spec);
  if (mark.is_none()) throw tc::DomainError("distribution requires a marking");
  tc::BivariateSeries t = tc::census::marked_t(tc::DegreeBound(delta), mark, n);
  tc::census::DistributionTable d = tc::census::distribution(t, n);
  tc::Real skew = tc::census::skewness(d, prec);
  auto& os = sink.stream();
  os << "# delta=" << delta << " mark=" << mark.to_string() << " n=" << n << " precision=" << prec
     << "\n";
  os << "# total=" << tc::to_decimal_string(d.total) << " mean=" << tc::to_fraction_string(d.mean)
     << " variance=" << tc::to_fraction_string(d.variance)
     << " skewness=" << real_str(skew, prec) << "\n";
  os << "n,k,count\n";
  for (size_t k = 0; k < d.counts.size(); ++k) {
    if (d.counts[k] != 0) os << n << "," << k << "," << tc::to_decimal_string(d.counts[k]) << "\n";
  }
  return 0;
}

int cmd_constants(int delta, const std::string& mark_spec, int prec, const std::string& h_str,
                  OutputSink& sink) {
  tc::Marking mark = parse_marking(mark_spec);
  if (mark.is_none()) throw tc::DomainError("constants requires a marking");
  tc::PrecisionScope scope(prec + 30);
  tc::Real h(h_str);
  tc::singularity::ImplicitSystem sys(tc::DegreeBound(delta), mark, prec);
  json doc;
  doc["delta"] = delta;
  doc["marking"] = mark.to_string();
  doc["precision"] = prec;
  doc["h"] = h_str;
  doc["x0"] = real_str(sys.x0(), prec);
  if (sys.zero_statistic()) {
    doc["mu"] = "0";
    doc["sigma"] = "0";
    doc["mu_nullvector"] = "0";
    doc["f1_residual"] = "0";
    doc["notes"] = "statistic is identically zero for this bound";
  } else {
    tc::singularity::AsymptoticConstants ac = tc::singularity::mu_sigma(sys, prec, h);
    tc::singularity::NullVectorMu nv = tc::singularity::mu_via_null_vector(sys, prec);
    doc["mu"] = real_str(ac.mu, prec);
    doc["sigma"] = real_str(ac.sigma, prec);
    doc["mu_nullvector"] = real_str(nv.mu, prec);
    doc["f1_residual"] = real_str(ac.diag.extended_residual, 3);
    doc["notes"] = "";
    doc["f_prime_1"] = real_str(ac.f_prime_1, prec);
    doc["f_double_prime_1"] = real_str(ac.f_double_prime_1, prec);
  }
  sink.stream() << doc.dump(2) << "\n";
  return 0;
}

int cmd_indices(int delta, const std::vector<std::string>& alphas,
                const std::vector<std::string>& betas, const std::vector<int>& orders, int prec,
                OutputSink& sink) {
  if (alphas.empty() && betas.empty())
    throw tc::DomainError("indices requires at least one --alpha or --beta");
  tc::PrecisionScope scope(prec + 30);
  tc::DegreeBound bound(delta);
  tc::indices::MuTable mu = tc::indices::compute_mu_table(bound, prec, !betas.empty());
  tc::indices::CensusCache cache(bound);
  int order_hint = 0;
  for (int n : orders) order_hint = std::max(order_hint, n);
  json reports = json::array();
  auto emit = [&](tc::indices::IndexReport rep, tc::indices::IndexKind kind) {
    json r;
    r["kind"] = rep.zagreb ? "zagreb" : "randic";
    r["exponent"] = real_str(rep.exponent, 20);
    r["constant"] = real_str(rep.constant, prec);
    json bd = json::object();
    for (const auto& [label, value] : rep.breakdown) bd[label] = real_str(value, prec);
    r["breakdown"] = bd;
    json fins = json::array();
    for (int n : orders) {
      tc::indices::ExpectedIndex e =
          tc::indices::exact_expected_index(cache, n, kind, rep.exponent, order_hint);
      json f;
      f["n"] = n;
      f["expectation"] = real_str(e.value, prec);
      if (e.exact) f["exact"] = tc::to_fraction_string(*e.exact);
      f["per_vertex"] = real_str(e.value / n, prec);
      f["abs_err"] = real_str(abs(e.value / n - rep.constant), 6);
      fins.push_back(f);
    }
    r["finite_n"] = fins;
    reports.push_back(r);
  };
  for (const std::string& a : alphas)
    emit(tc::indices::zagreb_constant(mu, tc::Real(a)), tc::indices::IndexKind::zagreb);
  for (const std::string& b : betas)
    emit(tc::indices::randic_constant(mu, tc::Real(b)), tc::indices::IndexKind::randic);
  json doc{{"delta", delta}, {"precision", prec}, {"reports", reports}};
  sink.stream() << doc.dump(2) << "\n";
  return 0;
}

int cmd_certify(int delta, int order, const std::string& marks_arg, OutputSink& sink) {
  tc::DegreeBound bound(delta);
  if (order > tc::oracle::kMaxOrder)
    throw tc::ResourceLimitError("certification bound is n <= " +
                                 std::to_string(tc::oracle::kMaxOrder));
  std::vector<tc::Marking> marks = parse_marks_list(marks_arg, delta);
  auto& os = sink.stream();
  int failures = 0;
  for (const tc::Marking& mark : marks) {
    tc::BivariateSeries t = tc::census::marked_t(bound, mark, order);
    bool ok = true;
    std::string first_diff;
    for (int n = 1; n <= order && ok; ++n) {
      tc::census::DistributionTable d = tc::census::distribution(t, n);
      std::vector<tc::Integer> expected = tc::oracle::aggregate(n, bound, mark);
      size_t width = std::max(expected.size(), d.counts.size());
      for (size_t k = 0; k < width; ++k) {
        tc::Integer c = k < d.counts.size() ? d.counts[k] : tc::Integer(0);
        tc::Integer o = k < expected.size() ? expected[k] : tc::Integer(0);
        if (c != o) {
          ok = false;
          first_diff = "first differing (n,k) = (" + std::to_string(n) + "," + std::to_string(k) +
                       "): census " + tc::to_decimal_string(c) + " vs oracle " +
                       tc::to_decimal_string(o);
          break;
        }
      }
    }
    if (ok) {
      os << "PASS " << mark.to_string() << " n<=" << order << "\n";
    } else {
      os << "FAIL " << mark.to_string() << " " << first_diff << "\n";
      ++failures;
    }
  }
  os << (failures == 0 ? "CERTIFIED" : "MISMATCH") << " delta=" << delta << " n<=" << order
     << " markings=" << marks.size() << "\n";
  return failures == 0 ? 0 : kExitCertification;
}

int cmd_tau(int delta, int order, int prec, OutputSink& sink) {
  tc::singularity::TauEstimate est = tc::singularity::estimate_tau(tc::DegreeBound(delta), order, prec);
  auto& os = sink.stream();
  os << "# delta=" << delta << " order=" << order << " precision=" << prec << "\n";
  os << "n,s_n,extrapolant\n";
  for (size_t i = 0; i < est.trace.size(); ++i) {
    os << est.trace[i].first << "," << real_str(est.trace[i].second, 20) << ","
       << real_str(est.extrapolants[i], 20) << "\n";
  }
  json footer{{"delta", delta},
              {"order", order},
              {"tau_hat", real_str(est.tau_hat, prec)},
              {"diverging", est.diverging}};
  os << "# " << footer.dump() << "\n";
  if (est.diverging) os << "# warning: extrapolant trace has not settled\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and asymptotic enumeration of trees with bounded maximum degree"};
  app.require_subcommand(1);
  const int prec_default = default_precision();

  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  auto* census_cmd = app.add_subcommand("census", "exact p_n, r_n, t_n tables");
  int c_delta = 3, c_n = 200;
  std::string c_format = "csv";
  census_cmd->add_option("--delta", c_delta, "maximum degree (>= 3)")->required();
  census_cmd->add_option("--n", c_n, "truncation order");
  census_cmd->add_option("--format", c_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* dist_cmd = app.add_subcommand("distribution", "exact marked-statistic distribution");
  int d_delta = 3, d_n = 120, d_prec = prec_default;
  std::string d_mark;
  dist_cmd->add_option("--delta", d_delta)->required();
  dist_cmd->add_option("--mark", d_mark, "degree:J or edge:I,J")->required();
  dist_cmd->add_option("--n", d_n, "tree order");
  dist_cmd->add_option("--prec", d_prec, "precision digits for skewness");

  auto* const_cmd = app.add_subcommand("constants", "asymptotic constants for a marking");
  const_cmd->set_help_flag("--help", "print help");  // frees -h for the step flag
  int k_delta = 3, k_prec = prec_default;
  std::string k_mark, k_h = "1e-6";
  const_cmd->add_option("--delta", k_delta)->required();
  const_cmd->add_option("--mark", k_mark, "degree:J or edge:I,J")->required();
  const_cmd->add_option("--prec", k_prec, "precision digits");
  const_cmd->add_option("--h", k_h, "finite-difference step");

  auto* idx_cmd = app.add_subcommand("indices", "general Zagreb / Randic constants");
  int i_delta = 3, i_prec = prec_default;
  std::vector<std::string> i_alphas, i_betas;
  std::vector<int> i_orders;
  idx_cmd->add_option("--delta", i_delta)->required();
  idx_cmd->add_option("--alpha", i_alphas, "Zagreb exponents");
  idx_cmd->add_option("--beta", i_betas, "Randic exponents");
  idx_cmd->add_option("--n", i_orders, "orders for exact finite-n comparison");
  idx_cmd->add_option("--prec", i_prec, "precision digits");

  auto* cert_cmd = app.add_subcommand("certify", "compare census tables with the tree oracle");
  int e_delta = 3, e_n = 10;
  std::string e_marks = "all";
  cert_cmd->add_option("--delta", e_delta)->required();
  cert_cmd->add_option("--n", e_n, "maximum tree order (oracle bound applies)");
  cert_cmd->add_option("--marks", e_marks, "all, or list like degree:1,edge:2,2");

  auto* tau_cmd = app.add_subcommand("tau", "subexponential trace and tau estimate");
  int t_delta = 3, t_n = 400, t_prec = prec_default;
  tau_cmd->add_option("--delta", t_delta)->required();
  tau_cmd->add_option("--n", t_n, "census order (>= 100)");
  tau_cmd->add_option("--prec", t_prec, "precision digits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    OutputSink sink;
    sink.open(out_path);
    if (census_cmd->parsed()) return cmd_census(c_delta, c_n, c_format, sink);
    if (dist_cmd->parsed()) return cmd_distribution(d_delta, d_mark, d_n, d_prec, sink);
    if (const_cmd->parsed()) return cmd_constants(k_delta, k_mark, k_prec, k_h, sink);
    if (idx_cmd->parsed()) return cmd_indices(i_delta, i_alphas, i_betas, i_orders, i_prec, sink);
    if (cert_cmd->parsed()) return cmd_certify(e_delta, e_n, e_marks, sink);
    if (tau_cmd->parsed()) return cmd_tau(t_delta, t_n, t_prec, sink);
  } catch (const tc::PrecisionInsufficientError& e) {
    json err{{"error", "precision"}, {"what", e.what()}};
    std::cerr << err.dump() << "\n";
    return kExitPrecision;
  } catch (const tc::IterationLimitError& e) {
    json err{{"error", "convergence"}, {"what", e.what()}, {"residual", e.residual()}};
    std::cerr << err.dump() << "\n";
    return kExitPrecision;
  } catch (const tc::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const tc::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitUsage;
}
