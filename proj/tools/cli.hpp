#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "semideriv/semideriv.hpp"

namespace semideriv::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;

struct Options {
  // shared
  std::string semiring;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t n = 0;

  // apply
  std::string matrix_file;
  std::optional<std::string> zero_set;
  std::optional<std::size_t> delta_k;
  std::optional<std::size_t> d_m;
  std::optional<std::string> pattern;
  std::optional<std::string> shift;

  // enumerate
  std::string klass = "families";

  // verify
  std::string kind;
  bool exhaustive = false;

  // decompose
  bool ascii = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open matrix file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) { return std::mt19937_64(seed + trial); }

inline const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

inline const char* boolean_text(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------

inline int cmd_axioms(const Options& o, std::ostream& out) {
  return dispatch_semiring(o.semiring, [&]<class S>(S) {
    const AxiomReport report = check_axioms<S>(o.trials, o.seed);
    if (report.passed()) {
      out << "PASS axioms semiring=" << S::name << " triples=" << report.triples_checked << " seed=" << o.seed
          << "\n";
      return kOk;
    }
    const auto& v = *report.violation;
    out << "FAIL axioms semiring=" << S::name << " law=\"" << v.law << "\" " << v.statement << " witness=("
        << v.witness[0] << ", " << v.witness[1] << ", " << v.witness[2] << ")\n";
    return kViolation;
  });
}

inline int cmd_apply(const Options& o, std::ostream& out) {
  const int specs = o.zero_set.has_value() + o.delta_k.has_value() + o.d_m.has_value() + o.pattern.has_value() +
                    o.shift.has_value();
  if (specs != 1) {
    throw UsageError("apply needs exactly one of --zero-set, --delta-k, --d-m, --pattern, --shift");
  }
  const std::string text = read_file(o.matrix_file);
  const MatrixHeader header = parse_matrix_header(text);
  if (o.shift) {
    if (header.semiring != MaxPlus::name) throw DomainError("--shift requires a maxplus matrix");
    const auto a = parse_matrix<MaxPlus>(text);
    out << format_matrix(hereditary_apply(ShiftDerivation(MaxPlus::parse(*o.shift)), a));
    return kOk;
  }
  return dispatch_semiring(header.semiring, [&]<class S>(S) {
    const auto a = parse_matrix<S>(text);
    const std::size_t n = a.size();
    UpperTriangular<S> result = a;
    if (o.zero_set) result = parse_zero_set(n, *o.zero_set)(a);
    if (o.delta_k) result = delta_k(n, *o.delta_k)(a);
    if (o.d_m) result = d_m(n, *o.d_m)(a);
    if (o.pattern) result = parse_pattern(n, *o.pattern)(a);
    out << format_matrix(result);
    return kOk;
  });
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  std::vector<MaskDerivation> masks;
  if (o.klass == "intervals") {
    masks = enumerate_interval_derivations(o.n);
  } else if (o.klass == "families") {
    masks = enumerate_family_derivations(o.n);
  } else {
    throw UsageError("--class must be intervals or families");
  }
  for (const auto& m : masks) out << "Z=" << format_zero_set(m) << "\n";
  out << "total=" << masks.size() << "\n";
  return kOk;
}

inline int cmd_oracle(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  const OracleReport report = brute_force_classify(o.n);
  out << format_report(report);
  out << verdict(report.agrees()) << " oracle n=" << o.n << " patterns=" << report.total_patterns
      << " disagreements=" << report.disagreements.size() << "\n";
  return report.agrees() ? kOk : kViolation;
}

inline int cmd_decompose(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  const MaskDerivation mask = parse_zero_set(o.n, o.zero_set.value_or(""));
  out << decompose(mask).to_string(o.ascii) << "\n";
  return kOk;
}

// verify ---------------------------------------------------------------------

template <Semiring S>
std::vector<std::pair<UpperTriangular<S>, UpperTriangular<S>>> random_pairs(const Options& o) {
  std::vector<std::pair<UpperTriangular<S>, UpperTriangular<S>>> pairs;
  pairs.reserve(o.trials);
  for (std::size_t t = 0; t < o.trials; ++t) {
    auto rng = trial_rng(o.seed, t);
    auto a = random_matrix<S>(o.n, rng);
    auto b = random_matrix<S>(o.n, rng);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  return pairs;
}

/// First Leibniz or linearity failure of f: "<label>=<t> <law> at (i,j): ...".
/// The label is "trial" for seeded trials and "pair" for exhaustive pair indices.
template <Semiring S, class F>
std::optional<std::string> first_failure(const F& f,
                                         const std::vector<std::pair<UpperTriangular<S>, UpperTriangular<S>>>& pairs,
                                         bool with_linearity, const std::string& label) {
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    const auto& [a, b] = pairs[t];
    const std::string where = label + "=" + std::to_string(t);
    if (auto w = leibniz_check<S>(f, a, b)) return where + " leibniz " + w->to_string();
    if (with_linearity) {
      if (auto w = linearity_check<S>(f, a, b)) return where + " linearity " + w->to_string();
    }
  }
  return std::nullopt;
}

inline std::vector<std::pair<UpperTriangular<Boolean>, UpperTriangular<Boolean>>> all_boolean_pairs(std::size_t n) {
  const auto matrices = enumerate_matrices(n);
  std::vector<std::pair<UpperTriangular<Boolean>, UpperTriangular<Boolean>>> pairs;
  pairs.reserve(matrices.size() * matrices.size());
  for (const auto& a : matrices) {
    for (const auto& b : matrices) pairs.emplace_back(a, b);
  }
  return pairs;
}

template <Semiring S>
std::vector<std::pair<UpperTriangular<S>, UpperTriangular<S>>> verification_pairs(const Options& o) {
  if constexpr (std::is_same_v<S, Boolean>) {
    if (o.exhaustive) return all_boolean_pairs(o.n);
  }
  return random_pairs<S>(o);
}

inline std::string pair_label(const Options& o) { return o.exhaustive ? "pair" : "trial"; }

inline std::string mode_text(const Options& o) {
  return o.exhaustive ? "mode=exhaustive" : "mode=random trials=" + std::to_string(o.trials) + " seed=" + std::to_string(o.seed);
}

template <Semiring S>
int verify_leibniz(const Options& o, std::ostream& out) {
  if (o.n > 12) throw UsageError("verify leibniz sweeps all 2^n zero sets; use --n <= 12");
  const auto pairs = verification_pairs<S>(o);
  bool all_ok = true;
  for (const auto& mask : enumerate_family_derivations(o.n)) {
    const auto failure = first_failure<S>(mask, pairs, true, pair_label(o));
    all_ok = all_ok && !failure;
    out << verdict(!failure) << " leibniz Z=" << format_zero_set(mask);
    if (failure) out << " " << *failure;
    out << "\n";
  }
  out << verdict(all_ok) << " verify leibniz n=" << o.n << " semiring=" << S::name << " " << mode_text(o) << "\n";
  return all_ok ? kOk : kViolation;
}

template <Semiring S>
int verify_theorem2(const Options& o, std::ostream& out) {
  const auto pairs = verification_pairs<S>(o);
  bool all_ok = true;
  for (std::size_t k = 1; k <= o.n; ++k) {
    for (std::size_t m = 1; m <= o.n; ++m) {
      const bool predicted = composition_is_derivation(o.n, k, m);
      const auto failure = first_failure<S>(compose(delta_k(o.n, k), d_m(o.n, m)), pairs, false, pair_label(o));
      const bool observed = !failure;
      all_ok = all_ok && predicted == observed;
      out << verdict(predicted == observed) << " theorem2 k=" << k << " m=" << m
          << " predicted=" << boolean_text(predicted) << " observed=" << boolean_text(observed);
      if (failure) out << " witness " << *failure;
      out << "\n";
    }
  }
  out << verdict(all_ok) << " verify theorem2 n=" << o.n << " semiring=" << S::name << " " << mode_text(o) << "\n";
  return all_ok ? kOk : kViolation;
}

template <Semiring S>
int verify_decompose(const Options& o, std::ostream& out) {
  bool all_ok = true;
  const auto report = [&](const MaskDerivation& mask, const std::string& label,
                          const std::vector<UpperTriangular<S>>& matrices) {
    const DecompositionExpr expr = decompose(mask);
    std::optional<Witness<S>> w;
    for (const auto& a : matrices) {
      if ((w = first_difference<S>(expr(a), mask(a)))) break;
    }
    all_ok = all_ok && !w;
    out << verdict(!w) << " decompose " << label << "Z=" << format_zero_set(mask) << " expr=" << expr.to_string(true);
    if (w) out << " " << w->to_string();
    out << "\n";
  };
  if (o.exhaustive) {
    if constexpr (std::is_same_v<S, Boolean>) {
      const auto matrices = enumerate_matrices(o.n);
      for (const auto& mask : enumerate_family_derivations(o.n)) report(mask, "", matrices);
    }
  } else {
    for (std::size_t t = 0; t < o.trials; ++t) {
      auto rng = trial_rng(o.seed, t);
      std::vector<std::size_t> z;
      for (std::size_t i = 1; i <= o.n; ++i) {
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) z.push_back(i);
      }
      report(MaskDerivation(o.n, z), "trial=" + std::to_string(t) + " ", {random_matrix<S>(o.n, rng)});
    }
  }
  out << verdict(all_ok) << " verify decompose n=" << o.n << " semiring=" << S::name << " " << mode_text(o) << "\n";
  return all_ok ? kOk : kViolation;
}

inline int verify_hereditary(const Options& o, std::ostream& out) {
  if (o.exhaustive) throw UsageError("verify hereditary has no exhaustive mode");
  if (o.semiring != MaxPlus::name) throw UsageError("verify hereditary requires --semiring maxplus");
  bool all_ok = true;
  for (std::size_t t = 0; t < o.trials; ++t) {
    auto rng = trial_rng(o.seed, t);
    const ShiftDerivation shift(MaxPlus::sample(rng));
    const auto a = random_matrix<MaxPlus>(o.n, rng);
    const auto b = random_matrix<MaxPlus>(o.n, rng);
    const Hereditary f{shift};
    std::optional<std::string> failure;
    if (auto w = leibniz_check<MaxPlus>(f, a, b)) failure = "leibniz " + w->to_string();
    else if (auto w2 = linearity_check<MaxPlus>(f, a, b)) failure = "linearity " + w2->to_string();
    if (failure) {
      all_ok = false;
      out << "FAIL hereditary trial=" << t << " x=" << MaxPlus::format(shift.shift()) << " " << *failure << "\n";
    }
  }
  out << verdict(all_ok) << " verify hereditary n=" << o.n << " semiring=maxplus " << mode_text(o) << "\n";
  return all_ok ? kOk : kViolation;
}

inline int cmd_verify(Options o, std::ostream& out) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  if (o.semiring.empty()) o.semiring = o.exhaustive ? "boolean" : "maxplus";
  if (o.exhaustive && (o.semiring != Boolean::name || o.n > kMaxClassifyDimension)) {
    throw UsageError("exhaustive mode requires --semiring boolean and --n <= 3");
  }
  if (!o.exhaustive && o.trials < 1) throw UsageError("--trials must be at least 1");
  if (o.kind == "hereditary") return verify_hereditary(o, out);
  return dispatch_semiring(o.semiring, [&]<class S>(S) {
    if (o.kind == "leibniz") return verify_leibniz<S>(o, out);
    if (o.kind == "theorem2") return verify_theorem2<S>(o, out);
    if (o.kind == "decompose") return verify_decompose<S>(o, out);
    throw UsageError("unknown verify kind '" + o.kind + "'");
  });
}

}  // namespace detail

/// Runs the command line. All report text goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jordan derivations on upper-triangular matrices over idempotent semirings", "semideriv"};
  app.require_subcommand(1);
  Options o;

  auto* axioms = app.add_subcommand("axioms", "Check the semiring laws on sampled triples");
  axioms->add_option("--semiring", o.semiring, "boolean|maxplus|minplus|fuzzy")->required();
  axioms->add_option("--trials", o.trials, "Random triples")->capture_default_str();
  axioms->add_option("--seed", o.seed)->capture_default_str();

  auto* apply = app.add_subcommand("apply", "Apply a mask or shift derivation to a matrix file");
  apply->add_option("matrix", o.matrix_file, "Matrix file")->required();
  apply->add_option("--zero-set", o.zero_set, "Comma-separated diagonal indices, e.g. 2,3,5");
  apply->add_option("--delta-k", o.delta_k, "Keep the first K rows");
  apply->add_option("--d-m", o.d_m, "Keep the last M columns");
  apply->add_option("--pattern", o.pattern, "Semicolon-separated positions, e.g. 1,1;2,2");
  apply->add_option("--shift", o.shift, "Entrywise max-plus shift X (decimal or -inf)");

  auto* enumerate = app.add_subcommand("enumerate", "List interval or family derivations");
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--class", o.klass, "intervals|families")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Verify derivation properties");
  verify->add_option("kind", o.kind, "leibniz|theorem2|decompose|hereditary")
      ->required()
      ->check(CLI::IsMember({"leibniz", "theorem2", "decompose", "hereditary"}));
  verify->add_option("--n", o.n)->required();
  verify->add_option("--semiring", o.semiring, "Default maxplus (boolean with --exhaustive)");
  verify->add_flag("--exhaustive", o.exhaustive, "All boolean matrix pairs (n <= 3)");
  verify->add_option("--trials", o.trials)->capture_default_str();
  verify->add_option("--seed", o.seed)->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Classify all zero patterns by brute force (n <= 3)");
  oracle->add_option("--n", o.n)->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Write a family mask as a sum of delta/d terms");
  decompose_cmd->add_option("--n", o.n)->required();
  decompose_cmd->add_option("--zero-set", o.zero_set, "Comma-separated diagonal indices");
  decompose_cmd->add_flag("--ascii", o.ascii, "Use delta/* instead of δ/·");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*axioms) return detail::cmd_axioms(o, out);
    if (*apply) return detail::cmd_apply(o, out);
    if (*enumerate) return detail::cmd_enumerate(o, out);
    if (*verify) return detail::cmd_verify(o, out);
    if (*oracle) return detail::cmd_oracle(o, out);
    if (*decompose_cmd) return detail::cmd_decompose(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace semideriv::cli
