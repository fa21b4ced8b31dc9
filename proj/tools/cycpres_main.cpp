#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "cycpres/enumerate.hpp"
#include "cycpres/group_model.hpp"
#include "cycpres/json_io.hpp"
#include "cycpres/snf.hpp"
#include "cycpres/verify.hpp"

namespace {

using namespace cycpres;

struct TupleOpts {
  long long r = 0, n = 1, s = 0, f = 0, A = 0;
};

void add_tuple(CLI::App* cmd, TupleOpts& t) {
  cmd->add_option("-r", t.r, "first block length (>= 0)")->required();
  cmd->add_option("-n", t.n, "number of generators")->required();
  cmd->add_option("-s", t.s, "second block length (signed)")->required();
  cmd->add_option("-f", t.f, "subscript step inside a block")->required();
  cmd->add_option("-A", t.A, "subscript shift of the second block")->required();
}

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;
  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    os = &file;
  }
};

void print_checks(const std::vector<Check>& checks) {
  for (const Check& c : checks)
    std::cerr << c.name << ": " << check_status_name(c.status)
              << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
}

// The worked six-generator example: the length-three positive word with one
// inverted letter, its subscript-stretched variant, and their shift extension.
VerificationReport example1_report(const Caps& caps) {
  VerificationReport rep;
  auto check = [&rep](const char* name, bool ok, std::string detail) {
    rep.checks.push_back(
        {name, ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
  };
  Word wf = concat(lambda_block(3, 1, 6), inverse(letter_word(3, 1)));
  Word wr = concat(lambda_block(3, 2, 6), inverse(letter_word(3, 1)));
  CyclicPresentation cpf = make_cyclic(6, wf);
  CyclicPresentation cpr = make_cyclic(6, wr);
  FinitePresentation ep = shift_extension(cpf);

  auto eo = group_order(ep, caps.max_cosets);
  check("extension-order", eo && *eo == 9072,
        eo ? "enumerated " + std::to_string(*eo) + ", expected 9072"
           : "enumeration overflowed");
  auto idx = subgroup_index(ep, {letter_word(0, 1)}, caps.max_cosets);
  check("shift-subgroup-index", idx && *idx == 1512,
        idx ? "index " + std::to_string(*idx) + ", expected 1512"
            : "enumeration overflowed");
  SNFResult ab = abelianization(ep);
  check("extension-abelianization",
        ab == SNFResult{{Int(2), Int(6)}, 0},
        "expected invariant factors [2,6]");

  auto derived_of = [&](const FinitePresentation& pres,
                        std::optional<long long>& order) -> std::optional<int> {
    CosetTable t = todd_coxeter(pres, {}, caps.max_cosets);
    if (t.status != CosetTable::Status::Closed) return std::nullopt;
    order = t.live;
    return derived_length(regular_rep(t));
  };
  std::optional<long long> of, orr, oe;
  auto df = derived_of(cyclic_presentation(cpf), of);
  check("derived-length-stretch-1", df && *df == 4,
        df ? "order " + std::to_string(*of) + ", derived length " +
                 std::to_string(*df) + ", expected 4"
           : "enumeration overflowed");
  auto dr = derived_of(cyclic_presentation(cpr), orr);
  check("derived-length-stretch-2", dr && *dr == 3,
        dr ? "order " + std::to_string(*orr) + ", derived length " +
                 std::to_string(*dr) + ", expected 3"
           : "enumeration overflowed");
  auto de = derived_of(ep, oe);
  check("derived-length-extension", de && *de == 4,
        de ? "order " + std::to_string(*oe) + ", derived length " +
                 std::to_string(*de) + ", expected 4"
           : "enumeration overflowed");
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cyclically presented groups: construction, classification, and "
      "independent verification"};
  app.require_subcommand(1);

  Caps caps;
  if (const char* env = std::getenv("CYCPRES_MAX_COSETS"))
    caps.max_cosets = std::atoll(env);
  std::string format = "json";
  std::string out_path;
  app.add_option("--max-cosets", caps.max_cosets,
                 "give up on an enumeration past this many cosets")
      ->capture_default_str();
  app.add_option("--element-cap", caps.element_cap,
                 "largest group order for element-by-element checks")
      ->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "write results to this file");

  int rc = 0;
  Output out;

  auto* classify_cmd =
      app.add_subcommand("classify", "classify one parameter tuple");
  TupleOpts ct;
  add_tuple(classify_cmd, ct);
  classify_cmd->callback([&] {
    out.open(out_path);
    ParamsM p = params_m(ct.r, ct.n, ct.s, ct.f, ct.A);
    Classification cls = classify(p);
    if (format == "csv")
      *out.os << csv_header() << "\n" << csv_row(p, cls) << "\n";
    else
      *out.os << classification_record(p, cls).dump(2) << "\n";
  });

  auto* construct_cmd = app.add_subcommand(
      "construct", "emit the word and presentations for one tuple");
  TupleOpts kt;
  add_tuple(construct_cmd, kt);
  construct_cmd->callback([&] {
    out.open(out_path);
    ParamsM p = params_m(kt.r, kt.n, kt.s, kt.f, kt.A);
    *out.os << construct_record(p).dump(2) << "\n";
  });

  auto* verify_cmd = app.add_subcommand(
      "verify", "cross-check the predicted structure by coset enumeration");
  TupleOpts vt;
  std::string preset;
  add_tuple(verify_cmd, vt);
  for (auto* o : verify_cmd->get_options())
    if (o->get_name() != "--help") o->required(false);
  verify_cmd->add_option("--preset", preset, "named regression (example1)")
      ->check(CLI::IsMember({"example1"}));
  verify_cmd->callback([&] {
    out.open(out_path);
    if (!preset.empty()) {
      VerificationReport rep = example1_report(caps);
      print_checks(rep.checks);
      Json checks = Json::array();
      for (const Check& c : rep.checks)
        checks.push_back(Json{{"name", c.name},
                              {"status", check_status_name(c.status)},
                              {"detail", c.detail}});
      *out.os << Json{{"preset", preset}, {"checks", checks}}.dump(2) << "\n";
      rc = rep.any_fail() ? 1 : 0;
      return;
    }
    size_t have = verify_cmd->count("-r") + verify_cmd->count("-n") +
                  verify_cmd->count("-s") + verify_cmd->count("-f") +
                  verify_cmd->count("-A");
    if (have != 5)
      throw std::invalid_argument(
          "verify needs a full tuple (-r -n -s -f -A) or --preset");
    ParamsM p = params_m(vt.r, vt.n, vt.s, vt.f, vt.A);
    VerificationReport rep = cross_verify(p, caps);
    print_checks(rep.checks);
    *out.os << report_record(p, rep).dump(2) << "\n";
    rc = rep.exit_code();
  });

  auto* fam_cmd = app.add_subcommand(
      "families", "evaluate a named parameter family with checked hypotheses");
  std::string fam_name;
  std::vector<long long> fam_args;
  bool fam_verify = false;
  fam_cmd->add_option("name", fam_name, "P, R, F, H, or F4")->required();
  fam_cmd->add_option("args", fam_args, "family arguments")
      ->required()
      ->expected(-1);
  fam_cmd->add_flag("--verify", fam_verify,
                    "enumerate the group and confirm the closed form");
  fam_cmd->callback([&] {
    out.open(out_path);
    FamilyResult fr = family_params(family_from_name(fam_name), fam_args);
    Json record = family_record(fr);
    if (fam_verify) {
      std::vector<Check> checks;
      auto check = [&checks](const char* name, bool ok, std::string detail) {
        checks.push_back({name, ok ? CheckStatus::Pass : CheckStatus::Fail,
                          std::move(detail)});
      };
      Classification cls = classify(fr.params);
      check("family-order",
            cls.kind == Kind::Finite && cls.order_G == fr.order,
            "classified " + std::string(kind_name(cls.kind)) + " of order " +
                cls.order_G.get_str());
      FreeProductDecomposition dec = gbar_params(fr.params);
      check("family-factor", dec.copies == 1 && dec.free_rank == 0 &&
                                 dec.factor == fr.b,
            "family and decomposition factors must agree");
      if (fr.order <= to_int(caps.max_cosets)) {
        auto got = group_order(
            cyclic_presentation(make_cyclic(fr.params.n, type_m_word(fr.params))),
            caps.max_cosets);
        check("family-enumeration", got && to_int(*got) == fr.order,
              got ? "enumerated " + std::to_string(*got)
                  : "enumeration overflowed");
        auto bo = group_order(b_presentation(fr.b), caps.max_cosets);
        check("family-metacyclic-enumeration", bo && to_int(*bo) == fr.order,
              bo ? "enumerated " + std::to_string(*bo)
                 : "enumeration overflowed");
      }
      print_checks(checks);
      Json jc = Json::array();
      for (const Check& c : checks)
        jc.push_back(Json{{"name", c.name},
                          {"status", check_status_name(c.status)},
                          {"detail", c.detail}});
      record["checks"] = jc;
      for (const Check& c : checks)
        if (c.status == CheckStatus::Fail) rc = 1;
    }
    *out.os << record.dump(2) << "\n";
  });

  auto* fix_cmd = app.add_subcommand(
      "fixpoints", "fixed points of the shift powers on a finite group");
  TupleOpts ft;
  add_tuple(fix_cmd, ft);
  long long fix_j = -1;
  fix_cmd->add_option("-j", fix_j, "single shift power (default: all)");
  fix_cmd->callback([&] {
    out.open(out_path);
    ParamsM p = params_m(ft.r, ft.n, ft.s, ft.f, ft.A);
    Classification cls = classify(p);
    if (cls.kind != Kind::Finite || cls.order_G < 2)
      throw std::invalid_argument(
          "fixed points are reported only for finite groups with at least two "
          "elements");
    Json rows = Json::array();
    long long j0 = fix_j >= 0 ? mod_ll(fix_j, p.n) : 0;
    long long j1 = fix_j >= 0 ? j0 + 1 : p.n;
    bool mismatch = false;
    for (long long j = j0; j < j1; ++j) {
      Int predicted = fix_order(p, j);
      auto cosets = fixed_cosets(p, j, caps.max_cosets);
      Json row{{"j", j},
               {"order", predicted.get_str()},
               {"fixed_point_free", fixed_point_free(p, j)}};
      if (cosets) {
        row["enumerated"] = *cosets;
        if (to_int(*cosets) != predicted) mismatch = true;
      }
      rows.push_back(row);
    }
    *out.os << Json{{"params", params_to_json(p)}, {"fixed_points", rows}}.dump(2)
            << "\n";
    if (mismatch) rc = 1;
  });

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "classify every valid tuple in a parameter box");
  long long n_min = 1, n_max = 1, r_min = 0, r_max = 0, s_min = 0, s_max = 0;
  long long fixed_f = -1, fixed_A = -1;
  bool sweep_verify = false;
  long long jobs = 1;
  sweep_cmd->add_option("--n-min", n_min)->required();
  sweep_cmd->add_option("--n-max", n_max)->required();
  sweep_cmd->add_option("--r-min", r_min)->required();
  sweep_cmd->add_option("--r-max", r_max)->required();
  sweep_cmd->add_option("--s-min", s_min)->required();
  sweep_cmd->add_option("--s-max", s_max)->required();
  sweep_cmd->add_option("--f", fixed_f, "fix this subscript step (default: all)");
  sweep_cmd->add_option("--A", fixed_A, "fix this block shift (default: all)");
  sweep_cmd->add_flag("--verify", sweep_verify, "cross-check every tuple");
  sweep_cmd->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::Range(1, 64));
  sweep_cmd->callback([&] {
    out.open(out_path);
    std::vector<ParamsM> tuples;
    for (long long n = n_min; n <= n_max; ++n)
      for (long long r = std::max<long long>(r_min, 0); r <= r_max; ++r)
        for (long long s = s_min; s <= s_max; ++s) {
          long long fa = fixed_f >= 0 ? fixed_f : 0;
          long long fb = fixed_f >= 0 ? fixed_f : n - 1;
          for (long long f = fa; f <= fb; ++f) {
            long long Aa = fixed_A >= 0 ? fixed_A : 0;
            long long Ab = fixed_A >= 0 ? fixed_A : n - 1;
            for (long long A = Aa; A <= Ab; ++A)
              if (params_m_valid(r, n, s, f, A))
                tuples.push_back(params_m(r, n, s, f, A));
          }
        }
    struct Row {
      std::string csv;
      Json json;
      int verify_exit = 0;
    };
    std::vector<Row> rows(tuples.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t i = next.fetch_add(1); i < tuples.size();
           i = next.fetch_add(1)) {
        const ParamsM& p = tuples[i];
        Classification cls = classify(p);
        rows[i].json = classification_record(p, cls);
        rows[i].csv = csv_row(p, cls);
        if (sweep_verify) {
          VerificationReport vr = cross_verify(p, caps);
          rows[i].verify_exit = vr.exit_code();
          rows[i].json["verification"] = report_record(p, vr)["checks"];
          rows[i].csv += "," + std::to_string(vr.exit_code());
        }
      }
    };
    std::vector<std::thread> pool;
    for (long long t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (format == "csv") {
      *out.os << csv_header() << (sweep_verify ? ",verify_exit" : "") << "\n";
      for (const Row& row : rows) *out.os << row.csv << "\n";
    } else {
      Json arr = Json::array();
      for (Row& row : rows) arr.push_back(std::move(row.json));
      *out.os << arr.dump(2) << "\n";
    }
    for (const Row& row : rows)
      if (row.verify_exit == 1) rc = 1;
  });

  auto* gnkl_cmd = app.add_subcommand(
      "gnkl", "three-letter words x0 x_k x_l: normal form and structure");
  long long gn = 1, gk = 0, gl = 0;
  gnkl_cmd->add_option("-n", gn, "number of generators")->required();
  gnkl_cmd->add_option("-k", gk, "second subscript")->required();
  gnkl_cmd->add_option("-l", gl, "third subscript")->required();
  gnkl_cmd->callback([&] {
    out.open(out_path);
    GnklParams q = gnkl_params(gn, gk, gl);
    GnklReport gr = gnkl_analyze(q);
    *out.os << gnkl_record(q, gr).dump(2) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
