// Command line interface for the cluster morphism toolkit. Outputs JSON on
// stdout (or DOT/plain text where noted); domain failures print a JSON error
// object on stderr and exit 1, usage problems exit 2.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmcat/cvec.hpp"
#include "cmcat/exseq.hpp"
#include "cmcat/picture_group.hpp"
#include "cmcat/stability.hpp"
#include "cmcat/topology.hpp"

using nlohmann::ordered_json;
using namespace cmcat;

namespace {

DimVec parse_vec(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  return j.get<DimVec>();
}

std::vector<DimVec> parse_vec_list(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  return j.get<std::vector<DimVec>>();
}

RatVec parse_rat_vec(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  RatVec out;
  for (const auto& e : j) {
    if (e.is_array()) {
      out.emplace_back(e.at(0).get<Int>(), e.at(1).get<Int>());
    } else {
      out.emplace_back(e.get<Int>());
    }
  }
  return out;
}

ordered_json to_json(const DimVec& v) { return ordered_json(v); }

ordered_json to_json(const std::vector<DimVec>& vs) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : vs) arr.push_back(to_json(v));
  return arr;
}

ordered_json to_json(const ClusterObject& x) { return to_json(x.dim()); }

ordered_json to_json(const std::vector<ClusterObject>& xs) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : xs) arr.push_back(to_json(x));
  return arr;
}

ordered_json word_json(const Word& w) {
  ordered_json arr = ordered_json::array();
  for (const auto& [root, e] : w.syllables)
    arr.push_back(ordered_json::array({to_json(root), e}));
  return arr;
}

ordered_json homology_json(const HomologyResult& h) {
  ordered_json arr = ordered_json::array();
  for (size_t i = 0; i < h.groups.size(); ++i) {
    ordered_json g;
    g["degree"] = h.lowest_degree + (int)i;
    g["free_rank"] = h.groups[i].free_rank;
    g["torsion"] = h.groups[i].torsion;
    arr.push_back(std::move(g));
  }
  return arr;
}

std::vector<ClusterObject> objects_from_option(const QuiverSpec& q,
                                               const std::string& text) {
  std::vector<ClusterObject> out;
  for (const auto& v : parse_vec_list(text))
    out.push_back(object_from_signed_dim(q, v));
  return out;
}

WideSubcat subcat_from_option(const QuiverSpec& q, const std::string& simples) {
  if (simples.empty()) return full_subcat(q);
  return make_wide(q, parse_vec_list(simples));
}

ConvexRootSet convex_from_option(const QuiverSpec& q,
                                 const std::string& roots) {
  if (roots.empty()) return make_convex(q, positive_roots(q));
  return make_convex(q, parse_vec_list(roots));
}

std::string gen_name(const DimVec& root) {
  std::string s = "x";
  for (Int e : root) s += "_" + std::to_string(e);
  return s;
}

std::string word_text(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.syllables.size(); ++i) {
    if (i) s += "*";
    s += gen_name(w.syllables[i].first);
    if (w.syllables[i].second != 1)
      s += "^" + std::to_string(w.syllables[i].second);
  }
  return s.empty() ? "1" : s;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json hnn_tower(const ConvexRootSet& S) {
  if (S.roots.empty()) return nullptr;
  HnnData data = hnn_data(S);
  ordered_json out;
  out["roots"] = to_json(S.roots);
  out["order"] = to_json(S.order);
  out["omega"] = to_json(data.omega);
  out["s_omega"] = to_json(data.s_omega.roots);
  ordered_json psi = ordered_json::array();
  for (const auto& [alpha, word] : data.psi) {
    ordered_json entry;
    entry["alpha"] = to_json(alpha);
    entry["word"] = to_json(word);
    psi.push_back(std::move(entry));
  }
  out["psi"] = std::move(psi);
  ordered_json retr = ordered_json::array();
  for (const auto& [root, image] : data.retraction) {
    ordered_json entry;
    entry["root"] = to_json(root);
    entry["image"] = to_json(image);
    retr.push_back(std::move(entry));
  }
  out["retraction"] = std::move(retr);
  out["relations_match"] = hnn_relation_check(S);
  out["rest"] = hnn_tower(data.s0);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cluster morphism toolkit"};
  app.require_subcommand(1);

  std::string quiver_path, set_text, seq_text, simples_text, roots_text;
  std::string beta_text, gamma_text, v_text, format = "json";
  int size = -1, index = -1;

  auto add_quiver = [&](CLI::App* cmd) {
    cmd->add_option("quiver", quiver_path, "quiver JSON file")->required();
  };

  CLI::App* roots_cmd = app.add_subcommand("roots", "positive roots");
  add_quiver(roots_cmd);

  CLI::App* wides_cmd =
      app.add_subcommand("wides", "wide subcategories by rank");
  add_quiver(wides_cmd);

  CLI::App* clusters_cmd =
      app.add_subcommand("clusters", "partial cluster tilting sets");
  add_quiver(clusters_cmd);
  clusters_cmd->add_option("--size", size, "set size (default: the rank)");

  CLI::App* mutate_cmd =
      app.add_subcommand("mutate", "exchange one object of a cluster");
  add_quiver(mutate_cmd);
  mutate_cmd->add_option("--set", set_text, "signed dimension vectors")
      ->required();
  mutate_cmd->add_option("--index", index, "0-based slot in the sorted set")
      ->required();

  CLI::App* theta_cmd = app.add_subcommand(
      "theta", "ordered cluster tilting set of a signed exceptional sequence");
  add_quiver(theta_cmd);
  theta_cmd->add_option("--seq", seq_text, "signed dimension vectors")
      ->required();

  CLI::App* theta_inv_cmd = app.add_subcommand(
      "theta-inv", "signed exceptional sequence of an ordered tilting set");
  add_quiver(theta_inv_cmd);
  theta_inv_cmd->add_option("--set", set_text, "signed dimension vectors")
      ->required();

  CLI::App* seqs_cmd =
      app.add_subcommand("seqs", "signed exceptional sequences");
  add_quiver(seqs_cmd);
  seqs_cmd->add_option("--size", size, "sequence length (default: the rank)");

  CLI::App* cvec_cmd =
      app.add_subcommand("cvec", "c-vectors of an ordered cluster tilting set");
  add_quiver(cvec_cmd);
  cvec_cmd->add_option("--set", set_text, "signed dimension vectors")
      ->required();
  cvec_cmd->add_option("--simples", simples_text,
                       "simples of the wide subcategory (default: all)");

  CLI::App* group_cmd = app.add_subcommand("group", "picture group presentation");
  add_quiver(group_cmd);
  group_cmd->add_option("--roots", roots_text,
                        "convex root set (default: all positive roots)");
  group_cmd->add_option("--format", format, "json or text");

  CLI::App* hnn_cmd =
      app.add_subcommand("hnn", "iterated HNN decomposition data");
  add_quiver(hnn_cmd);
  hnn_cmd->add_option("--roots", roots_text,
                      "convex root set (default: all positive roots)");

  CLI::App* convex_cmd =
      app.add_subcommand("convex-check", "convexity of a root set");
  add_quiver(convex_cmd);
  convex_cmd->add_option("--roots", roots_text, "root set")->required();

  CLI::App* complex_cmd =
      app.add_subcommand("complex", "cellular chain complex");
  add_quiver(complex_cmd);
  complex_cmd->add_option("--roots", roots_text,
                          "convex root set (default: all positive roots)");

  CLI::App* homology_cmd =
      app.add_subcommand("homology", "integer homology of the picture space");
  add_quiver(homology_cmd);
  homology_cmd->add_option("--roots", roots_text,
                           "convex root set (default: all positive roots)");

  CLI::App* ccomplex_cmd =
      app.add_subcommand("cluster-complex", "cluster complex of a subcategory");
  add_quiver(ccomplex_cmd);
  ccomplex_cmd->add_option("--simples", simples_text,
                           "simples of the wide subcategory (default: all)");
  ccomplex_cmd->add_option("--format", format, "json or dot");

  CLI::App* picture_cmd = app.add_subcommand(
      "picture-subcomplex", "perpendicular subcomplex with wall signs");
  add_quiver(picture_cmd);
  picture_cmd->add_option("--beta", beta_text, "indecomposable root")
      ->required();
  picture_cmd->add_option("--simples", simples_text,
                          "simples of the wide subcategory (default: all)");

  CLI::App* stability_cmd = app.add_subcommand(
      "stability", "membership in a semi-invariant stability domain");
  add_quiver(stability_cmd);
  stability_cmd->add_option("--gamma", gamma_text, "exceptional root")
      ->required();
  stability_cmd
      ->add_option("--v", v_text, "rational vector as [num,den] pairs")
      ->required();
  stability_cmd->add_option("--simples", simples_text,
                            "simples of the wide subcategory (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    QuiverSpec q = quiver_from_json_file(quiver_path);

    if (roots_cmd->parsed()) {
      ordered_json out;
      out["roots"] = to_json(positive_roots(q));
      emit(out);
    } else if (wides_cmd->parsed()) {
      CategoryInventory inv = enumerate_objects(make_convex(q, positive_roots(q)));
      ordered_json arr = ordered_json::array();
      for (size_t r = 0; r < inv.by_rank.size(); ++r) {
        for (const auto& A : inv.by_rank[r]) {
          ordered_json entry;
          entry["rank"] = (int)r;
          entry["simples"] = to_json(A.simples);
          arr.push_back(std::move(entry));
        }
      }
      ordered_json out;
      out["objects"] = std::move(arr);
      emit(out);
    } else if (clusters_cmd->parsed()) {
      WideSubcat A = full_subcat(q);
      const int k = size < 0 ? A.rank() : size;
      ordered_json arr = ordered_json::array();
      for (const auto& T : enumerate_tilting_sets(A, k)) arr.push_back(to_json(T));
      ordered_json out;
      out["clusters"] = std::move(arr);
      emit(out);
    } else if (mutate_cmd->parsed()) {
      WideSubcat A = full_subcat(q);
      auto T = objects_from_option(q, set_text);
      ordered_json out;
      out["set"] = to_json(mutate(A, T, index));
      emit(out);
    } else if (theta_cmd->parsed()) {
      WideSubcat A = full_subcat(q);
      auto seq = objects_from_option(q, seq_text);
      ordered_json out;
      out["tilting"] = to_json(theta(A, seq));
      emit(out);
    } else if (theta_inv_cmd->parsed()) {
      WideSubcat A = full_subcat(q);
      auto T = objects_from_option(q, set_text);
      ordered_json out;
      out["sequence"] = to_json(theta_inverse(A, T));
      emit(out);
    } else if (seqs_cmd->parsed()) {
      WideSubcat A = full_subcat(q);
      const int k = size < 0 ? A.rank() : size;
      ordered_json arr = ordered_json::array();
      for (const auto& s : enumerate_signed_seqs(A, k)) arr.push_back(to_json(s));
      ordered_json out;
      out["sequences"] = std::move(arr);
      emit(out);
    } else if (cvec_cmd->parsed()) {
      WideSubcat A = subcat_from_option(q, simples_text);
      auto T = objects_from_option(q, set_text);
      CVectors cv = c_vectors(A, T);
      ordered_json out;
      out["local"] = to_json(cv.local);
      out["ambient"] = to_json(cv.ambient);
      out["speyer_thomas"] = speyer_thomas_check(A, cv.ambient);
      emit(out);
    } else if (group_cmd->parsed()) {
      GroupPresentation pres = presentation(convex_from_option(q, roots_text));
      if (format == "text") {
        std::string gens, rels;
        for (size_t i = 0; i < pres.generators.size(); ++i) {
          if (i) gens += ", ";
          gens += gen_name(pres.generators[i]);
        }
        for (size_t i = 0; i < pres.relations.size(); ++i) {
          if (i) rels += ",\n  ";
          rels += word_text(pres.relations[i].lhs) + " = " +
                  word_text(pres.relations[i].rhs);
        }
        std::cout << "< " << gens << " |\n  " << rels << " >\n";
      } else {
        ordered_json rels = ordered_json::array();
        for (const auto& rel : pres.relations) {
          ordered_json r;
          r["lhs"] = word_json(rel.lhs);
          r["rhs"] = word_json(rel.rhs);
          rels.push_back(std::move(r));
        }
        AbelianInvariants ab = abelianization(pres);
        ordered_json out;
        out["generators"] = to_json(pres.generators);
        out["relations"] = std::move(rels);
        out["abelianization"] = {{"free_rank", ab.free_rank},
                                 {"torsion", ab.torsion}};
        emit(out);
      }
    } else if (hnn_cmd->parsed()) {
      emit(hnn_tower(convex_from_option(q, roots_text)));
    } else if (convex_cmd->parsed()) {
      ConvexCheck chk = is_convex(q, parse_vec_list(roots_text));
      ordered_json out;
      out["convex"] = chk.ok;
      if (chk.ok) {
        out["order"] = to_json(chk.order);
      } else {
        out["reason"] = chk.reason;
        out["witness"] = to_json(chk.witness);
        if (chk.reason == "closure") out["missing"] = to_json(chk.missing);
      }
      emit(out);
    } else if (complex_cmd->parsed()) {
      ChainComplexData c = chain_complex(convex_from_option(q, roots_text));
      ordered_json cells = ordered_json::array();
      for (const auto& level : c.cells_by_rank) {
        ordered_json lv = ordered_json::array();
        for (const auto& A : level) lv.push_back(to_json(A.simples));
        cells.push_back(std::move(lv));
      }
      ordered_json bnd = ordered_json::array();
      for (const auto& D : c.boundary) bnd.push_back(D);
      ordered_json out;
      out["cells"] = std::move(cells);
      out["boundary"] = std::move(bnd);
      emit(out);
    } else if (homology_cmd->parsed()) {
      ChainComplexData c = chain_complex(convex_from_option(q, roots_text));
      ordered_json out;
      out["homology"] = homology_json(homology(c));
      emit(out);
    } else if (ccomplex_cmd->parsed()) {
      WideSubcat A = subcat_from_option(q, simples_text);
      SimplicialComplexData c = cluster_complex(A);
      if (format == "dot") {
        // Exchange graph: facets are nodes, edges join facets sharing all
        // but one vertex.
        std::cout << "graph exchange {\n";
        for (size_t i = 0; i < c.facets.size(); ++i) {
          std::string label;
          for (size_t t = 0; t < c.facets[i].size(); ++t) {
            if (t) label += " ";
            label += vec_str(c.vertices[c.facets[i][t]].dim());
          }
          std::cout << "  f" << i << " [label=\"" << label << "\"];\n";
        }
        for (size_t i = 0; i < c.facets.size(); ++i) {
          for (size_t j = i + 1; j < c.facets.size(); ++j) {
            std::vector<int> shared;
            std::set_intersection(c.facets[i].begin(), c.facets[i].end(),
                                  c.facets[j].begin(), c.facets[j].end(),
                                  std::back_inserter(shared));
            if (shared.size() + 1 == c.facets[i].size())
              std::cout << "  f" << i << " -- f" << j << ";\n";
          }
        }
        std::cout << "}\n";
      } else {
        ordered_json out;
        out["vertices"] = to_json(c.vertices);
        out["facets"] = c.facets;
        out["homology"] = homology_json(simplicial_homology(c));
        emit(out);
      }
    } else if (picture_cmd->parsed()) {
      WideSubcat A = subcat_from_option(q, simples_text);
      PictureSubcomplex sub = picture_subcomplex(A, parse_vec(beta_text));
      ordered_json orient = ordered_json::array();
      for (const auto& rec : sub.orientation) {
        ordered_json r;
        r["wall"] = rec.wall;
        r["completed"] = rec.completed;
        r["completing"] = to_json(rec.completing_dim);
        r["sign"] = rec.sign;
        orient.push_back(std::move(r));
      }
      ordered_json out;
      out["vertices"] = to_json(sub.data.vertices);
      out["facets"] = sub.data.facets;
      out["orientation"] = std::move(orient);
      out["homology"] = homology_json(simplicial_homology(sub.data));
      emit(out);
    } else if (stability_cmd->parsed()) {
      WideSubcat A = subcat_from_option(q, simples_text);
      StabilityVerdict v =
          in_stability_domain(A, parse_vec(gamma_text), parse_rat_vec(v_text));
      ordered_json out;
      out["member"] = v.member;
      if (!v.member) {
        out["violated"] = v.violated;
        if (v.violated == "subroot") out["witness"] = to_json(v.witness);
      }
      emit(out);
    }
  } catch (const DomainError& e) {
    ordered_json err;
    err["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    ordered_json err;
    err["error"] = {{"kind", "UsageError"}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    ordered_json err;
    err["error"] = {{"kind", "Internal"}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 1;
  }
  return 0;
}
