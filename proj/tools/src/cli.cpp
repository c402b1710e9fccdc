#include "noether_cli/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <ostream>

#include "noether/catalog.hpp"
#include "noether/character.hpp"
#include "noether/error.hpp"
#include "noether/rationality.hpp"
#include "noether_cli/suites.hpp"

namespace noether::cli {

namespace {

void print(std::ostream& out, const Report& r, bool json) {
  if (json) {
    out << to_json(r).dump(2) << "\n";
    return;
  }
  if (r.data.is_object() && r.data.contains("generators")) {
    if (r.data.contains("order")) out << "order " << r.data["order"].dump() << "\n";
    for (const auto& g : r.data["generators"]) out << g.get<std::string>() << "\n";
  }
  out << to_text(r);
}

Report catalog_list() {
  Report r;
  r.command = "catalog list";
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : catalog()) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : e.generators) gens.push_back(g.to_string());
    entries.push_back({{"id", e.id}, {"order", e.order}, {"isomorphism", e.iso_label}, {"printed", e.printed}, {"generators", gens}});
  }
  r.data = {{"entries", entries}};
  return r;
}

void print_catalog_list(std::ostream& out, const Report& r) {
  for (const auto& e : r.data["entries"]) {
    out << e["id"].get<std::string>() << "  order " << e["order"].get<std::uint64_t>() << "  " << e["isomorphism"].get<std::string>()
        << "  ";
    bool first = true;
    for (const auto& g : e["generators"]) {
      out << (first ? "" : " ") << g.get<std::string>();
      first = false;
    }
    out << "\n";
  }
}

Report group_info(const std::string& spec) {
  PermGroup g = resolve_group(spec);
  Report r;
  r.command = "group " + spec;
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& o : g.orbits()) orbits.push_back(o);
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_string());
  r.data = {{"spec", g.to_spec()}, {"degree", g.degree()}, {"order", g.order()}, {"transitive", g.is_transitive()},
            {"orbits", orbits}, {"generators", gens}};
  return r;
}

// The first table image of the script gains "+1", which no correct table survives.
void perturb_first_table(CaseScript& s) {
  for (auto& c : s.claims) {
    if (c.kind != "table") continue;
    auto& images = c.args["images"];
    if (!images.is_array() || images.empty()) continue;
    auto& first = images.front();
    if (first.is_array() && first.size() == 2 && first[1].is_string()) {
      first[1] = "(" + first[1].get<std::string>() + ")+1";
      return;
    }
  }
  throw DomainError("case " + s.id + " has no action table to perturb");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"noether: exact checks for rationality arguments about permutation group actions", "noether"};
  app.require_subcommand(1);
  bool json = false;
  std::function<Report()> action;
  std::function<void(const Report&)> text_printer;

  auto with_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Print the report as JSON"); };

  // catalog
  auto* cat = app.add_subcommand("catalog", "The sixteen transitive subgroups of S6");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List entries with orders and generators");
  auto* cat_check = cat->add_subcommand("check", "Orders, transitivity, non-conjugacy, even parts");
  for (auto* s : {cat, cat_list, cat_check}) with_json(s);
  cat_list->callback([&] {
    action = catalog_list;
    text_printer = [&](const Report& r) { print_catalog_list(out, r); };
  });
  cat_check->callback([&] { action = catalog_report; });

  // group
  std::string group_spec;
  auto* grp = app.add_subcommand("group", "Order, orbits and generators of a group spec");
  grp->add_option("spec", group_spec, "\"degree=6; (1,2,3) (1,2)\", a catalog id, S<n> or C<n>")->required();
  with_json(grp);
  grp->callback([&] {
    action = [&] { return group_info(group_spec); };
    text_printer = [&](const Report& r) {
      const auto& d = r.data;
      out << d["spec"].get<std::string>() << "\norder " << d["order"].get<std::uint64_t>()
          << (d["transitive"].get<bool>() ? ", transitive" : ", intransitive") << "\norbits " << d["orbits"].dump() << "\n";
    };
  });

  // wreath
  std::string wg, wh, wexpect;
  auto* wr = app.add_subcommand("wreath", "H wr G on m*n points");
  wr->set_help_flag("--help", "Print this help message and exit");
  wr->add_option("--g", wg, "Top group on m points")->required();
  wr->add_option("--h", wh, "Base group on n points")->required();
  wr->add_option("--expect", wexpect, "Catalog id the product should be conjugate to");
  with_json(wr);
  wr->callback([&] {
    action = [&] { return wreath_report(wg, wh, wexpect.empty() ? std::nullopt : std::optional<std::string>(wexpect)); };
  });

  // sylow
  std::uint64_t sp = 0;
  std::size_t sn = 0;
  bool scheck = false;
  auto* syl = app.add_subcommand("sylow", "Sylow p-subgroup of S_n");
  syl->add_option("-p", sp, "Prime")->required();
  syl->add_option("-n", sn, "Degree")->required();
  syl->add_flag("--check", scheck, "Check p-group property and conjugacy to the classical generators");
  with_json(syl);
  syl->callback([&] { action = [&] { return sylow_report(sp, sn, scheck); }; });

  // embed
  std::string egroup;
  std::vector<std::string> eproduct;
  bool efixtures = false;
  auto* emb = app.add_subcommand("embed", "Embedding of a permutation module into the regular representation");
  auto* eg = emb->add_option("--group", egroup, "Transitive group");
  auto* ep = emb->add_option("--product", eproduct, "Two groups A B for x_i -> sum_j z_ij, y_j -> sum_i z_ij")->expected(2);
  auto* ef = emb->add_flag("--fixtures", efixtures, "All catalog entries plus an intransitive control");
  eg->excludes(ep)->excludes(ef);
  ep->excludes(ef);
  with_json(emb);
  emb->callback([&] {
    if (efixtures) {
      action = embedding_fixtures_report;
    } else if (!eproduct.empty()) {
      action = [&] { return product_embedding_report(resolve_group(eproduct[0]), resolve_group(eproduct[1])); };
    } else if (!egroup.empty()) {
      action = [&] { return embedding_report(resolve_group(egroup), egroup); };
    } else {
      throw CLI::ValidationError("embed", "one of --group, --product, --fixtures is required");
    }
  });

  // invariants
  auto* inv = app.add_subcommand("invariants", "Invariant rings of wreath actions");
  inv->require_subcommand(1);
  std::string ispec;
  std::optional<std::uint64_t> ichar;
  int imax = kDefaultMaxDegree;
  bool ineg = false;
  auto* iw = inv->add_subcommand("wreath", "Run the generator pipeline (or the claimed list) of a spec file");
  iw->add_option("--spec", ispec, "Wreath spec JSON file, or 'example'")->required();
  iw->add_option("--char", ichar, "Characteristic (0 or a prime)");
  iw->add_option("--max-degree", imax, "Verification depth")->check(CLI::Range(0, 12));
  iw->add_flag("--negative-control", ineg, "Drop the last generator");
  auto* ip = inv->add_subcommand("polarization", "Polarized elementary symmetric functions");
  for (auto* s : {inv, iw, ip}) with_json(s);
  iw->callback([&] {
    action = [&] {
      if (ispec == "example" && !ichar && !ineg) return example_wreath_report(imax);
      WreathProblem p = ispec == "example" ? wreath_problem_from_json(example_wreath_problem(), ichar) : load_wreath_problem(ispec, ichar);
      return invariants_report(p, {imax, ineg});
    };
  });
  ip->callback([&] { action = polarization_report; });

  // molien
  std::string mgroup;
  int mmax = kDefaultMaxDegree;
  auto* mol = app.add_subcommand("molien", "Molien coefficients against monomial orbit counts");
  mol->add_option("--group", mgroup, "Permutation group")->required();
  mol->add_option("--max-degree", mmax, "Highest degree")->check(CLI::Range(0, 12));
  with_json(mol);
  mol->callback([&] { action = [&] { return molien_report(resolve_group(mgroup), mmax); }; });

  // verify
  auto* ver = app.add_subcommand("verify", "Replay proof scripts and fixed suites");
  ver->require_subcommand(1);
  VerifyOptions vopts;
  bool vneg = false;
  std::string vcase;
  auto add_verify_options = [&](CLI::App* s) {
    s->add_option("--char", vopts.characteristic, "Field characteristic");
    s->add_option("--prime", vopts.prime, "Prime for the fiber-count oracle");
    s->add_option("--trials", vopts.trials, "Trials for the fiber-count oracle");
    s->add_option("--seed", vopts.seed, "Random seed");
    s->add_flag("--negative-control", vneg, "Inject a known-bad fixture");
    with_json(s);
  };
  auto* vc = ver->add_subcommand("case", "One case script by id or file");
  vc->add_option("id", vcase, "Case id (e.g. 3.2) or a script JSON file")->required();
  auto* vr = ver->add_subcommand("rho", "The homomorphism S5 -> S6 and its image");
  auto* va = ver->add_subcommand("all", "Every suite");
  with_json(ver);
  for (auto* s : {vc, vr, va}) add_verify_options(s);
  vc->callback([&] {
    action = [&] {
      bool is_file = vcase.ends_with(".json") || std::filesystem::exists(vcase);
      CaseScript s = is_file ? load_case_file(vcase) : load_case(vcase);
      if (vneg) perturb_first_table(s);
      Report r = verify_case(s, vopts);
      if (vneg) r.command += " --negative-control";
      return r;
    };
  });
  vr->callback([&] { action = [&] { return rho_report(vneg); }; });
  va->callback([&] { action = [&] { return verify_all({vopts, vneg}); }; });

  // character
  std::string cid;
  bool call = false;
  auto* chr = app.add_subcommand("character", "Permutation character inner products");
  auto* co = chr->add_option("--id", cid, "Catalog id");
  auto* ca = chr->add_flag("--all", call, "All catalog entries");
  co->excludes(ca);
  with_json(chr);
  chr->callback([&] {
    if (cid.empty() && !call) throw CLI::ValidationError("character", "--id or --all is required");
    action = [&] { return call ? characters_report() : character_report(cid); };
  });

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::Success&) {
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "noether: " << e.what() << "\n";
    return 2;
  }
  if (!action) {
    err << "noether: nothing to do\n";
    return 2;
  }
  try {
    Report r = action();
    if (text_printer && !json) {
      text_printer(r);
    } else {
      print(out, r, json);
    }
    return r.exit_code();
  } catch (const Error& e) {
    err << "noether: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace noether::cli
