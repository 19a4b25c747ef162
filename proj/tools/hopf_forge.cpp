// hopf-forge: exact construction and verification of the doubled Hopf
// *-algebras attached to symmetric groups, with a canonical JSON interchange
// format. Exit codes: 0 all checks pass, 1 verification failure, 2 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hf/json_io.hpp"
#include "hf/qiso.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

void print_report(const hf::Report& rep, bool as_json) {
  if (as_json)
    std::cout << rep.to_json().dump() << "\n";
  else
    std::cout << rep.to_text();
}

int parse_sn_spec(const std::string& spec) {
  if (spec.rfind("sn:", 0) != 0) throw hf::Error("group spec must be sn:<n>");
  int n = std::stoi(spec.substr(3));
  if (n < 2 || n > 6) throw hf::Error("group spec out of range: supported sn:2 .. sn:6");
  return n;
}

hf::GroupAutomorphism parse_auto_spec(const hf::SnGroup& sn, const std::string& spec) {
  hf::Elt w;
  if (spec == "id") {
    w = sn.group.identity;
  } else if (spec == "w0") {
    w = sn.w0();
  } else if (spec.rfind("conj:", 0) == 0) {
    w = hf::parse_element(sn, spec.substr(5));
  } else {
    throw hf::Error("automorphism spec must be w0, id or conj:<word>");
  }
  hf::GroupAutomorphism theta = hf::conjugation_automorphism(sn.group, w);
  if (!hf::is_order_two_or_id(sn.group, theta))
    throw hf::Error("conjugation is not of order two: w^2 is not central");
  return theta;
}

int cmd_build_double(const std::string& group_spec, const std::string& auto_spec,
                     const std::string& out_path) {
  hf::SnGroup sn;
  hf::GroupAutomorphism theta;
  try {
    sn = hf::sn_group(parse_sn_spec(group_spec));
    theta = parse_auto_spec(sn, auto_spec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  try {
    hf::HopfAlgebra h = hf::double_direct({sn.group, theta}, /*verify=*/true);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return kExitInput;
    }
    out << hf::hopf_to_json(h);
    return kExitPass;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

int cmd_verify_hopf(const std::string& path, bool as_json) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return kExitInput;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  hf::HopfAlgebra h;
  try {
    h = hf::hopf_from_json(buf.str());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  hf::Report rep = hf::verify_hopf_axioms(h);
  print_report(rep, as_json);
  return rep.all_pass() ? kExitPass : kExitFail;
}

int cmd_verify_qiso(int n, bool as_json) {
  if (n < 2 || n > 6) {
    std::cerr << "error: --n must be in [2, 6]\n";
    return kExitInput;
  }
  try {
    hf::QisoBundle b = hf::qiso_group(n);
    hf::Report rep;
    rep.merge("hopf", hf::verify_hopf_axioms(*b.k));
    rep.merge("coaction", hf::verify_coaction(b.alpha));
    rep.merge("isometry", hf::verify_isometric(b.alpha, b.triple));
    rep.merge("u", hf::verify_u_corepresentation(b));
    rep.merge("rel", hf::verify_section2_relations(b));
    rep.merge("structure", hf::verify_component_structure(b));
    print_report(rep, as_json);
    return rep.all_pass() ? kExitPass : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

int cmd_s3_report(bool as_json, const std::string& export_k1, const std::string& export_k2) {
  try {
    hf::S3CaseData data = hf::s3_case_study();
    hf::Report rep = hf::verify_s3_nonisomorphism(data);
    rep.merge("erratum", hf::s3_erratum_report(data));
    {
      hf::SnGroup s3 = hf::sn_group(3);
      hf::GroupAutomorphism theta = hf::conjugation_automorphism(s3.group, s3.w0());
      rep.merge("erratum.crossed", hf::doubling_erratum_report({s3.group, theta}));
    }
    if (!export_k1.empty()) {
      std::ofstream out(export_k1, std::ios::binary);
      out << hf::hopf_to_json(*data.k1);
    }
    if (!export_k2.empty()) {
      std::ofstream out(export_k2, std::ios::binary);
      out << hf::hopf_to_json(*data.k2);
    }
    print_report(rep, as_json);
    if (!as_json) {
      const hf::Check* cert = rep.find("nonisomorphism_certified");
      if (cert && cert->pass) std::cout << "CERTIFIED: " << cert->note << "\n";
    }
    return rep.all_pass() ? kExitPass : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

int cmd_length(int n, const std::string& gens_spec, const std::string& element_spec) {
  try {
    hf::SnGroup sn = hf::sn_group(n);
    hf::GeneratingSet gens = hf::parse_generating_set(sn, gens_spec);
    hf::Elt x = hf::parse_element(sn, element_spec);
    std::cout << hf::cayley_length(sn.group, gens, x) << "\n";
    return kExitPass;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hopf *-algebra doublings of symmetric groups"};
  app.require_subcommand(1);

  std::string group_spec, auto_spec = "w0", out_path;
  auto* build = app.add_subcommand("build-double", "construct a doubling and write canonical JSON");
  build->add_option("--group", group_spec, "group spec, sn:<n>")->required();
  build->add_option("--auto", auto_spec, "automorphism: w0, id or conj:<word>");
  build->add_option("--out", out_path, "output path")->required();

  std::string verify_path;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify-hopf", "verify the axioms of a JSON Hopf algebra");
  verify->add_option("path", verify_path, "input file")->required();
  verify->add_flag("--json", verify_json, "machine-readable report");

  int qiso_n = 3;
  bool qiso_json = false;
  auto* qiso = app.add_subcommand("verify-qiso", "full verification for one symmetric group");
  qiso->add_option("--n", qiso_n, "symmetric group degree (2..6)")->required();
  qiso->add_flag("--json", qiso_json, "machine-readable report");

  bool s3_json = false;
  std::string export_k1, export_k2;
  auto* s3 = app.add_subcommand("s3-report", "the dimension-12 case study report");
  s3->add_flag("--json", s3_json, "machine-readable report");
  s3->add_option("--export-k1", export_k1, "write the first Hopf algebra as JSON");
  s3->add_option("--export-k2", export_k2, "write the second Hopf algebra as JSON");

  int len_n = 3;
  std::string len_gens = "coxeter", len_element;
  auto* length = app.add_subcommand("length", "word length for a generating set");
  length->add_option("--n", len_n, "symmetric group degree (2..7)")->required();
  length->add_option("--gens", len_gens, "\"coxeter\" or comma-separated words");
  length->add_option("--element", len_element, "word, one-line notation or e")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  if (build->parsed()) return cmd_build_double(group_spec, auto_spec, out_path);
  if (verify->parsed()) return cmd_verify_hopf(verify_path, verify_json);
  if (qiso->parsed()) return cmd_verify_qiso(qiso_n, qiso_json);
  if (s3->parsed()) return cmd_s3_report(s3_json, export_k1, export_k2);
  if (length->parsed()) return cmd_length(len_n, len_gens, len_element);
  return kExitInput;
}
