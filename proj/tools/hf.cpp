#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hf/errors.hpp"
#include "hf/exactmath.hpp"
#include "hf/formulas.hpp"
#include "hf/gradedroot.hpp"
#include "hf/json_io.hpp"
#include "hf/plumbing.hpp"
#include "hf/seifert.hpp"
#include "hf/tau.hpp"

namespace {

hf::SeifertData manifold_from_tokens(const std::vector<std::string>& tokens) {
  if (tokens.empty()) {
    throw CLI::ValidationError(
        "manifold", "give a manifold, e.g. 'brieskorn 2 5 9' or 'e0=-2 arms=2/1,5/3,9/8'");
  }
  std::string joined;
  for (const std::string& t : tokens) {
    if (!joined.empty()) joined += ' ';
    joined += t;
  }
  return hf::parse_seifert(joined);
}

struct Range {
  long long lo = 1, hi = 1;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto to_ll = [&](const std::string& s) -> long long {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--n", "range must look like N or LO..HI");
    }
    if (used != s.size() || s.empty()) {
      throw CLI::ValidationError("--n", "range must look like N or LO..HI");
    }
    return v;
  };
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = to_ll(text);
  } else {
    r.lo = to_ll(text.substr(0, dots));
    r.hi = to_ll(text.substr(dots + 2));
  }
  if (r.lo < 1 || r.hi < r.lo) {
    throw CLI::ValidationError("--n", "need 1 <= LO <= HI");
  }
  return r;
}

std::string position_text(long long first, long long last) {
  std::ostringstream out;
  out << first;
  if (last != first) out << ".." << last;
  return out.str();
}

std::string module_text(const std::string& label, const hf::HFPlusModule& m) {
  std::ostringstream out;
  out << label << "\n";
  out << "  d = " << m.d << "\n";
  out << "  towers:";
  if (m.towers.empty()) {
    out << " none";
  } else {
    bool first = true;
    for (const hf::Tower& t : m.towers) {
      out << (first ? " " : "; ") << "(" << t.bottom << ", len " << t.length
          << ") x" << t.mult;
      first = false;
    }
  }
  out << "\n";
  out << "  finite rank = " << hf::finite_rank(m) << "\n";
  return out.str();
}

void describe_seifert(const hf::SeifertData& s) {
  std::cout << hf::manifold_label(s) << "\n";
  std::cout << "  " << hf::seifert_to_text(s) << "\n";
  std::cout << "  homology sphere: " << (hf::validate(s) ? "yes" : "no") << "\n";
  std::cout << "  orbifold euler number e = " << hf::orbifold_euler(s).get_str()
            << "\n";
  std::cout << "  epsilon = " << hf::orbifold_epsilon(s).get_str() << "\n";
  std::cout << "  truncation bound = " << hf::truncation_bound(s).get_str()
            << "\n";
}

void run_tau(const hf::SeifertData& s, long long margin, bool extrema,
             bool csv) {
  const hf::TauFunction t = hf::tau_sequence(s, margin);
  if (csv) {
    std::cout << "j,tau\n";
    for (std::size_t j = 0; j < t.values.size(); ++j) {
      std::cout << j << "," << t.values[j] << "\n";
    }
    return;
  }
  if (extrema) {
    const hf::ReducedTau r = hf::reduce(t);
    std::cout << "reduced:";
    for (const hf::Extremum& e : r.extrema) std::cout << " " << e.value;
    std::cout << "\n";
    const hf::ExtremaTable table = hf::split_extrema(r);
    std::cout << "i\tM_i\tm_i\ttau(M_i)\ttau(m_i)\n";
    for (std::size_t i = 0; i < table.mins.size(); ++i) {
      std::cout << i << "\t";
      if (i < table.maxes.size()) {
        std::cout << position_text(table.maxes[i].first, table.maxes[i].last);
      } else {
        std::cout << "-";
      }
      std::cout << "\t" << position_text(table.mins[i].first, table.mins[i].last)
                << "\t";
      if (i < table.maxes.size()) {
        std::cout << table.maxes[i].value;
      } else {
        std::cout << "-";
      }
      std::cout << "\t" << table.mins[i].value << "\n";
    }
    return;
  }
  std::cout << hf::manifold_label(s) << " tau(0.." << t.values.size() - 1
            << "), truncation bound " << t.bound << "\n";
  std::cout << "tau:";
  for (long long v : t.values) std::cout << " " << v;
  std::cout << "\n";
}

void run_compare(const std::string& family_text, const Range& range,
                 const std::string& source_text, bool as_json,
                 long long margin) {
  const hf::Family f = hf::parse_family(family_text);
  hf::ClosedFormSource source = hf::ClosedFormSource::Auto;
  if (source_text == "plus1") source = hf::ClosedFormSource::PlusOne;
  else if (source_text == "minus1") source = hf::ClosedFormSource::MinusOne;
  else if (source_text == "table") source = hf::ClosedFormSource::Table;
  hf::Json rows = hf::Json::array();
  long long n_equal = 0, n_struct = 0, n_degenerate = 0, n_mismatch = 0;
  for (long long n = range.lo; n <= range.hi; ++n) {
    try {
      const hf::ModuleComparison c = hf::compare_family(f, n, source, margin);
      if (as_json) {
        hf::Json row;
        row["family"] = hf::family_key(f);
        row["n"] = n;
        row["manifold"] = c.manifold;
        row["equal"] = c.equal;
        row["shape_equal"] = c.shape_equal;
        row["d_equal"] = c.d_equal;
        row["indexed_offset"] = c.indexed_offset;
        row["closed"] = hf::module_json(c.manifold, c.closed.module);
        row["pipeline"] = hf::module_json(c.manifold, c.pipeline);
        rows.push_back(std::move(row));
      } else {
        std::cout << hf::family_key(f) << " n=" << n << " [" << c.manifold
                  << "]: ";
        if (c.equal) {
          std::cout << "equal (d=" << c.pipeline.d << ", "
                    << c.pipeline.towers.size() << " tower shapes)\n";
          ++n_equal;
        } else if (c.shape_equal) {
          std::cout << "structural match, indexed bottoms offset "
                    << (c.indexed_offset >= 0 ? "+" : "")
                    << c.indexed_offset << " (d "
                    << (c.d_equal ? "equal" : "differs") << ")\n";
          ++n_struct;
        } else {
          std::cout << "MISMATCH\n";
          std::cout << "  closed form:\n"
                    << module_text("  " + c.manifold, c.closed.module);
          std::cout << "  pipeline:\n"
                    << module_text("  " + c.manifold, c.pipeline);
          ++n_mismatch;
        }
      }
    } catch (const hf::DomainEdge& e) {
      if (as_json) {
        hf::Json row;
        row["family"] = hf::family_key(f);
        row["n"] = n;
        row["degenerate"] = true;
        row["error"] = e.what();
        rows.push_back(std::move(row));
      } else {
        std::cout << hf::family_key(f) << " n=" << n
                  << ": closed form degenerate (" << e.what() << ")\n";
      }
      ++n_degenerate;
    }
  }
  if (as_json) {
    std::cout << hf::json_dump(rows);
  } else {
    std::cout << "result: " << n_equal << " equal, " << n_struct
              << " structural, " << n_degenerate << " degenerate, "
              << n_mismatch << " mismatched\n";
  }
}

void run_sweep(const std::string& family_text, const Range& range,
               long long margin) {
  std::vector<hf::Family> families;
  if (family_text == "all") {
    families = hf::tabulated_families();
  } else {
    families.push_back(hf::parse_family(family_text));
  }
  std::cout << "family,n,d,tower_bottom,tower_len,mult\n";
  for (const hf::Family& f : families) {
    for (long long n = range.lo; n <= range.hi; ++n) {
      const hf::SeifertData s =
          hf::brieskorn(hf::from_i64(f.p), hf::from_i64(f.q),
                        hf::from_i64(hf::family_third(f, n)));
      const hf::HFPlusModule m = hf::hf_plus(s, margin);
      if (m.towers.empty()) {
        std::cout << hf::family_key(f) << "," << n << "," << m.d << ",,,\n";
      }
      for (const hf::Tower& t : m.towers) {
        std::cout << hf::family_key(f) << "," << n << "," << m.d << ","
                  << t.bottom << "," << t.length << "," << t.mult << "\n";
      }
    }
  }
}

void run_delta_families(long long n, long long margin) {
  std::cout << "family\tknot\tcomputed\tclosed_form\tstated_by_cover\t"
               "stated_by_knot\n";
  for (const hf::DeltaRow& r : hf::delta_family_report(n, margin)) {
    std::cout << r.family << "\t" << r.knot << "\t" << r.delta_computed << "\t"
              << r.delta_closed_form << (r.closed_form_ok ? " ok" : " MISMATCH")
              << "\t" << r.delta_stated_by_cover
              << (r.stated_by_cover_ok ? " ok" : " MISMATCH") << "\t"
              << r.delta_stated_by_knot
              << (r.stated_by_knot_ok ? " ok" : " MISMATCH") << "\n";
  }
}

void run_conjecture(long long p, long long k, const Range& range,
                    long long margin) {
  const hf::ConjectureReport rep =
      hf::conjecture_check(p, k, range.lo, range.hi, margin);
  std::cout << "p,k,n,side,third,d,expected,agree\n";
  for (const hf::ConjectureRow& row : rep.rows) {
    std::cout << rep.p << "," << rep.k << "," << row.n << "," << row.side
              << "," << row.third << "," << row.d_measured << ","
              << row.d_conjectured << "," << (row.agree ? 1 : 0) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computation of graded roots, tau functions, and the HF+ module "
      "(d-invariant plus finite towers) for Seifert-fibered homology spheres"};
  app.require_subcommand(1);
  long long margin = 0;
  app.add_option("--bound-margin", margin,
                 "extend the tau truncation bound by this many extra steps")
      ->check(CLI::NonNegativeNumber);

  // brieskorn
  auto* cmd_brieskorn = app.add_subcommand(
      "brieskorn", "describe the Brieskorn sphere with the given multiplicities");
  std::vector<long long> triple;
  cmd_brieskorn->add_option("a", triple, "three pairwise coprime multiplicities")
      ->expected(3)
      ->required();
  cmd_brieskorn->callback([&]() {
    describe_seifert(hf::brieskorn(hf::from_i64(triple[0]),
                                   hf::from_i64(triple[1]),
                                   hf::from_i64(triple[2])));
  });

  // seifert
  auto* cmd_seifert =
      app.add_subcommand("seifert", "parse and describe Seifert data");
  std::vector<std::string> seifert_tokens;
  cmd_seifert->add_option("manifold", seifert_tokens, "manifold description")
      ->expected(-1);
  cmd_seifert->callback(
      [&]() { describe_seifert(manifold_from_tokens(seifert_tokens)); });

  // surgery
  auto* cmd_surgery = app.add_subcommand(
      "surgery", "Brieskorn sphere produced by 1/n surgery on a torus knot");
  std::vector<long long> surgery_args;
  std::string sign_text = "plus";
  cmd_surgery->add_option("pqn", surgery_args, "p q n")->expected(3)->required();
  cmd_surgery
      ->add_option("--sign", sign_text, "surgery coefficient sign (default plus)")
      ->check(CLI::IsMember({"plus", "minus"}));
  cmd_surgery->callback([&]() {
    const hf::SurgerySign sign = sign_text == "plus"
                                     ? hf::SurgerySign::PlusOneOverN
                                     : hf::SurgerySign::MinusOneOverN;
    const auto a = hf::surgery_target(hf::from_i64(surgery_args[0]),
                                      hf::from_i64(surgery_args[1]),
                                      hf::from_i64(surgery_args[2]), sign);
    std::cout << (sign_text == "plus" ? "+" : "-") << "1/" << surgery_args[2]
              << " surgery on T(" << surgery_args[0] << "," << surgery_args[1]
              << ") gives Sigma(" << a[0].get_str() << "," << a[1].get_str()
              << "," << a[2].get_str()
              << "); invariants below are for its orientation reversal\n";
    describe_seifert(hf::brieskorn(a[0], a[1], a[2]));
  });

  // tau
  auto* cmd_tau = app.add_subcommand("tau", "tau function of a manifold");
  std::vector<std::string> tau_tokens;
  bool tau_extrema = false, tau_csv = false;
  cmd_tau->add_option("manifold", tau_tokens, "manifold description")
      ->expected(-1);
  auto* tau_ext_flag =
      cmd_tau->add_flag("--extrema", tau_extrema, "print the extrema table");
  cmd_tau->add_flag("--csv", tau_csv, "print j,tau CSV")->excludes(tau_ext_flag);
  cmd_tau->callback([&]() {
    run_tau(manifold_from_tokens(tau_tokens), margin, tau_extrema, tau_csv);
  });

  // root
  auto* cmd_root = app.add_subcommand("root", "graded root of a manifold");
  std::vector<std::string> root_tokens;
  bool root_dot_flag = false, root_ascii_flag = false;
  cmd_root->add_option("manifold", root_tokens, "manifold description")
      ->expected(-1);
  auto* root_ascii_opt =
      cmd_root->add_flag("--ascii", root_ascii_flag, "ASCII drawing (default)");
  cmd_root->add_flag("--dot", root_dot_flag, "DOT graph output")
      ->excludes(root_ascii_opt);
  cmd_root->callback([&]() {
    const hf::SeifertData s = manifold_from_tokens(root_tokens);
    const hf::GradedRoot r = hf::build_root(hf::reduce(hf::tau_sequence(s, margin)));
    if (root_dot_flag) {
      std::cout << hf::root_dot(r);
    } else {
      std::cout << hf::manifold_label(s) << "\n" << hf::root_ascii(r);
    }
  });

  // hf
  auto* cmd_hf = app.add_subcommand(
      "hf", "HF+ module: d-invariant and finite towers");
  std::vector<std::string> hf_tokens;
  bool hf_json = false;
  std::string from_json_path;
  cmd_hf->add_option("manifold", hf_tokens, "manifold description")
      ->expected(-1);
  cmd_hf->add_flag("--json", hf_json, "JSON output");
  cmd_hf->add_flag("--text", "plain text output (default)");
  cmd_hf->add_option("--from-json", from_json_path,
                     "re-read a module from a JSON file instead of computing");
  cmd_hf->callback([&]() {
    std::string label;
    hf::HFPlusModule m;
    if (!from_json_path.empty()) {
      if (!hf_tokens.empty()) {
        throw CLI::ValidationError("--from-json",
                                   "give either a manifold or --from-json");
      }
      std::ifstream in(from_json_path);
      if (!in) {
        throw hf::MalformedInput("cannot open file: " + from_json_path);
      }
      std::stringstream buf;
      buf << in.rdbuf();
      m = hf::module_from_text(buf.str(), &label);
    } else {
      const hf::SeifertData s = manifold_from_tokens(hf_tokens);
      label = hf::manifold_label(s);
      m = hf::hf_plus(s, margin);
    }
    if (hf_json) {
      std::cout << hf::json_dump(hf::module_json(label, m));
    } else {
      std::cout << module_text(label, m);
    }
  });

  // compare
  auto* cmd_compare = app.add_subcommand(
      "compare", "check a closed-form module against the full pipeline");
  std::string compare_family_text, compare_range_text = "1..1";
  std::string compare_source = "auto";
  bool compare_json = false;
  cmd_compare->add_option("--family", compare_family_text, "family, e.g. 2,5,minus1")
      ->required();
  cmd_compare->add_option("--n", compare_range_text, "parameter range N or LO..HI");
  cmd_compare->add_option("--source", compare_source, "closed form to use")
      ->check(CLI::IsMember({"auto", "plus1", "minus1", "table"}));
  cmd_compare->add_flag("--json", compare_json, "JSON output");
  cmd_compare->callback([&]() {
    run_compare(compare_family_text, parse_range(compare_range_text),
                compare_source, compare_json, margin);
  });

  // sweep
  auto* cmd_sweep = app.add_subcommand(
      "sweep", "CSV of pipeline modules across a family grid");
  std::string sweep_family_text = "all", sweep_range_text = "1..1";
  cmd_sweep->add_option("--family", sweep_family_text,
                        "family key or 'all' (default all)");
  cmd_sweep->add_option("--n", sweep_range_text, "parameter range N or LO..HI");
  cmd_sweep->callback([&]() {
    run_sweep(sweep_family_text, parse_range(sweep_range_text), margin);
  });

  // delta
  auto* cmd_delta = app.add_subcommand(
      "delta", "concordance invariant from a cyclic branched cover");
  long long delta_cover = 0;
  std::string delta_knot_text;
  bool delta_families = false;
  std::string delta_range_text = "1..1";
  cmd_delta->add_option("--cover", delta_cover, "cover order (prime power)");
  cmd_delta->add_option("--knot", delta_knot_text, "torus knot P,Q");
  cmd_delta->add_flag("--families", delta_families,
                      "report the six tabulated families instead");
  cmd_delta->add_option("--n", delta_range_text,
                        "family parameter (with --families)");
  cmd_delta->callback([&]() {
    if (delta_families) {
      const Range r = parse_range(delta_range_text);
      for (long long n = r.lo; n <= r.hi; ++n) {
        std::cout << "n=" << n << "\n";
        run_delta_families(n, margin);
      }
      return;
    }
    if (delta_cover == 0 || delta_knot_text.empty()) {
      throw CLI::ValidationError(
          "delta", "give --cover and --knot, or --families");
    }
    const auto comma = delta_knot_text.find(',');
    if (comma == std::string::npos) {
      throw CLI::ValidationError("--knot", "knot must look like P,Q");
    }
    long long kp = 0, kq = 0;
    try {
      std::size_t u1 = 0, u2 = 0;
      kp = std::stoll(delta_knot_text.substr(0, comma), &u1);
      kq = std::stoll(delta_knot_text.substr(comma + 1), &u2);
      if (u1 != comma || u2 != delta_knot_text.size() - comma - 1) {
        throw std::invalid_argument("junk");
      }
    } catch (const std::exception&) {
      throw CLI::ValidationError("--knot", "knot must look like P,Q");
    }
    std::cout << "delta_" << delta_cover << "(T(" << kp << "," << kq
              << ")) = " << hf::delta_invariant(delta_cover, kp, kq, margin)
              << "\n";
  });

  // conjecture
  auto* cmd_conj = app.add_subcommand(
      "conjecture", "check the parity rule for d over a parameter range");
  long long conj_p = 0, conj_k = 0;
  std::string conj_range_text = "1..1";
  cmd_conj->add_option("--p", conj_p, "odd torus parameter > 1")->required();
  cmd_conj->add_option("--k", conj_k, "offset, coprime to 2p, not +-1 mod 2p")
      ->required();
  cmd_conj->add_option("--n", conj_range_text, "parameter range N or LO..HI");
  cmd_conj->callback([&]() {
    run_conjecture(conj_p, conj_k, parse_range(conj_range_text), margin);
  });

  // plumb
  auto* cmd_plumb = app.add_subcommand(
      "plumb", "negative-definite star plumbing of a manifold");
  std::vector<std::string> plumb_tokens;
  bool plumb_dot = false;
  cmd_plumb->add_option("manifold", plumb_tokens, "manifold description")
      ->expected(-1);
  cmd_plumb->add_flag("--dot", plumb_dot, "DOT graph output");
  cmd_plumb->add_flag("--text", "plain text output (default)");
  cmd_plumb->callback([&]() {
    const hf::SeifertData s = manifold_from_tokens(plumb_tokens);
    const hf::PlumbingGraph g = hf::star_plumbing(s);
    if (plumb_dot) {
      std::cout << hf::plumbing_dot(g);
      return;
    }
    std::cout << hf::manifold_label(s) << "\n" << hf::plumbing_text(g);
    const hf::IntMatrix mat = hf::intersection_matrix(g);
    std::cout << "det = " << hf::determinant(mat).get_str() << "\n";
    std::cout << "negative definite = "
              << (hf::is_negative_definite(mat) ? "yes" : "no") << "\n";
    const std::vector<int> bad = hf::bad_vertices(g);
    std::cout << "bad vertices:";
    if (bad.empty()) {
      std::cout << " none";
    } else {
      for (int v : bad) std::cout << " v" << v;
    }
    std::cout << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const hf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
