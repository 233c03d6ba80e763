#include "mcgcert/cli.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "mcgcert/garside.hpp"
#include "mcgcert/verify.hpp"

namespace mcgcert {

namespace {

std::string render_poly_matrix(const PolyMatrix& m) {
  std::string out;
  for (int i = 0; i < m.dim(); ++i) {
    out += "[ ";
    for (int j = 0; j < m.dim(); ++j) {
      if (j) out += " | ";
      LaurentPoly p = m.at(i, j);
      out += p.is_zero() ? "0" : p.str();
    }
    out += " ]\n";
  }
  return out;
}

struct CliState {
  int g = 0, b = 0, n = 0;
  int bound = 6;
  std::string format = "text";
  std::string out_path;
  std::string group;
  std::string word;
  std::ostream* out = nullptr;
  int exit_code = 0;

  void emit(const std::string& text) {
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw std::runtime_error("cannot open output path " + out_path);
      f << text;
    } else {
      *out << text;
    }
  }

  void emit_certs(const std::vector<Certificate>& certs) {
    std::size_t failed = 0;
    for (const Certificate& c : certs)
      if (!c.pass()) ++failed;
    if (format == "json") {
      if (certs.size() == 1) {
        emit(certificate_json(certs[0]).dump(2) + "\n");
      } else {
        Json arr = Json::array();
        for (const Certificate& c : certs) arr.push_back(certificate_json(c));
        emit(arr.dump(2) + "\n");
      }
    } else {
      std::string text;
      for (const Certificate& c : certs) text += render_certificate(c) + "\n";
      text += "certificates: " + std::to_string(certs.size()) +
              ", failed: " + std::to_string(failed) + "\n";
      emit(text);
    }
    if (failed) exit_code = 1;
  }

  SurfaceTriple triple() const { return SurfaceTriple{g, b, n}; }
};

CoxeterSystem group_by_name(const std::string& name) {
  if (name == "b3") return CoxeterSystem::type_a(3);
  if (name == "b4") return CoxeterSystem::type_a(4, {"a1", "b", "a2"});
  if (name == "b5") return CoxeterSystem::type_a(5);
  if (name == "d4") return CoxeterSystem::type_d4();
  throw std::runtime_error("unknown group " + name + " (use b3, b4, b5, d4)");
}

Representation rep_by_name(const std::string& name) {
  if (name == "b3") return lk_representation(3);
  if (name == "b4") return lk_representation(4, {"a1", "b", "a2"});
  if (name == "b5") return lk_representation(5);
  if (name == "d4") return cw_representation_d4();
  throw std::runtime_error("unknown group " + name + " (use b3, b4, b5, d4)");
}

void add_triple_opts(CLI::App* sub, CliState& st) {
  sub->add_option("--g", st.g, "genus")->required();
  sub->add_option("--b", st.b, "boundary components")->required();
  sub->add_option("--n", st.n, "punctures")->required();
}

void add_report_opts(CLI::App* sub, CliState& st) {
  sub->add_option("--format", st.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", st.out_path, "write the report to this path");
}

}  // namespace

std::string expand_power_sugar(const std::string& text) {
  std::string s = text;
  while (true) {
    std::size_t close = s.find(')');
    if (close == std::string::npos) {
      if (s.find('(') != std::string::npos)
        throw std::runtime_error("unbalanced parentheses in word");
      return s;
    }
    std::size_t open = s.rfind('(', close);
    if (open == std::string::npos)
      throw std::runtime_error("unbalanced parentheses in word");
    std::string inner = s.substr(open + 1, close - open - 1);
    std::size_t after = close + 1;
    long long k = 1;
    if (after < s.size() && s[after] == '^') {
      ++after;
      std::size_t start = after;
      if (after < s.size() && s[after] == '-') ++after;
      while (after < s.size() && std::isdigit(static_cast<unsigned char>(s[after])))
        ++after;
      if (after == start) throw std::runtime_error("missing exponent after ^");
      k = std::stoll(s.substr(start, after - start));
    }
    Word w = power(parse_word(inner), k);
    s = s.substr(0, open) + " " + render_word(w) + " " + s.substr(after);
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CliState st;
  st.out = &out;

  CLI::App app{"certified presentation collapses, Garside normal forms, and "
               "matrix models for low-complexity mapping class groups"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "run certificate checks");
  verify->require_subcommand(1);

  CLI::App* vall = verify->add_subcommand("all", "every table row plus the word, "
                                                 "star, center, and subgroup checks");
  vall->add_option("--bound", st.bound, "largest m+n for the genus-0 rows");
  add_report_opts(vall, st);
  vall->callback([&] { st.emit_certs(verify_all(st.bound)); });

  CLI::App* vrow = verify->add_subcommand("row", "one table row");
  add_triple_opts(vrow, st);
  vrow->add_option("--bound", st.bound, "largest m+n for the genus-0 rows");
  add_report_opts(vrow, st);
  vrow->callback([&] { st.emit_certs({verify_row(st.triple(), st.bound)}); });

  CLI::App* vwords = verify->add_subcommand("words", "braid word identities in B4");
  add_report_opts(vwords, st);
  vwords->callback([&] { st.emit_certs({verify_word_identities()}); });

  CLI::App* vstars = verify->add_subcommand("stars", "star word identities in A(D4)");
  add_report_opts(vstars, st);
  vstars->callback([&] { st.emit_certs({verify_star_identities()}); });

  CLI::App* vcenters = verify->add_subcommand("centers", "central element witnesses");
  add_report_opts(vcenters, st);
  vcenters->callback([&] { st.emit_certs({verify_center_claims()}); });

  CLI::App* vht = verify->add_subcommand("ht", "the rank-2 freeness question");
  add_report_opts(vht, st);
  vht->callback([&] { st.emit_certs({hamidi_tehrani()}); });

  CLI::App* nf = app.add_subcommand("nf", "Garside normal form of a word");
  nf->add_option("--group", st.group, "b3, b4, b5, or d4")->required();
  nf->add_option("--word", st.word, "word, with ( ... )^k sugar")->required();
  add_report_opts(nf, st);
  nf->callback([&] {
    CoxeterSystem sys = group_by_name(st.group);
    GarsideElement g = normal_form(sys, parse_word(expand_power_sugar(st.word)));
    if (st.format == "json")
      st.emit(garside_json(g).dump(2) + "\n");
    else
      st.emit(render_garside(sys, g) + "\n");
  });

  CLI::App* rep = app.add_subcommand("rep", "matrix image of a word, or the "
                                            "matrix model of a table row");
  rep->add_option("--group", st.group, "b3, b4, b5, or d4");
  rep->add_option("--word", st.word, "word, with ( ... )^k sugar");
  rep->add_option("--g", st.g, "genus");
  rep->add_option("--b", st.b, "boundary components");
  rep->add_option("--n", st.n, "punctures");
  rep->add_option("--bound", st.bound, "largest m+n for the genus-0 rows");
  add_report_opts(rep, st);
  rep->callback([&] {
    if (!st.word.empty()) {
      if (st.group.empty())
        throw std::runtime_error("rep --word needs --group");
      Representation r = rep_by_name(st.group);
      PolyMatrix m =
          evaluate_word_matrix(r, parse_word(expand_power_sugar(st.word)));
      if (st.format == "json")
        st.emit(matrix_json(m).dump() + "\n");
      else
        st.emit(render_poly_matrix(m));
    } else {
      st.emit_certs({verify_matrix_rep(st.triple(), st.bound)});
    }
  });

  CLI::App* ab = app.add_subcommand("abelianize", "abelian invariants of a "
                                                  "table row, source vs target");
  add_triple_opts(ab, st);
  ab->add_option("--bound", st.bound, "largest m+n for the genus-0 rows");
  add_report_opts(ab, st);
  ab->callback([&] {
    SurfaceTriple t = st.triple();
    AbelianInvariants sa, ta;
    if (t.g == 1) {
      GenusOnePlan plan = genus1_plan(t);
      sa = abelianization(plan.source);
      ta = abelianization(plan.stages.back().target_presentation);
    } else {
      GenusZeroPlan plan = genus0_plan(t);
      if (t.b + t.n > st.bound)
        throw std::runtime_error("row " + t.str() + " exceeds the configured bound");
      sa = abelianization(GroupOracle(plan.first).presentation());
      ta = plan.second ? abelianization(GroupOracle(plan.second).presentation())
                       : sa;
    }
    bool match = sa == ta;
    if (st.format == "json")
      st.emit(Json{{"triple", t.str()},
                   {"source", render_abelian(sa)},
                   {"target", render_abelian(ta)},
                   {"match", match}}
                  .dump(2) +
              "\n");
    else
      st.emit("source: " + render_abelian(sa) + "\ntarget: " + render_abelian(ta) +
              "\nmatch: " + (match ? "yes" : "no") + "\n");
    if (!match) st.exit_code = 1;
  });

  CLI::App* pp = app.add_subcommand("print-presentation",
                                    "presentation underlying a table row");
  add_triple_opts(pp, st);
  add_report_opts(pp, st);
  pp->callback([&] {
    SurfaceTriple t = st.triple();
    Presentation p;
    if (t.g == 1)
      p = genus1_plan(t).source;
    else
      p = GroupOracle(genus0_plan(t).first).presentation();
    if (st.format == "json") {
      Json rels = Json::array();
      for (const Word& r : p.relators) rels.push_back(render_word(r));
      st.emit(Json{{"gens", p.gens}, {"relators", rels}}.dump(2) + "\n");
    } else {
      st.emit(render_presentation(p));
    }
  });

  std::vector<const char*> argv;
  argv.push_back("mcgcert");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return st.exit_code;
}

}  // namespace mcgcert
