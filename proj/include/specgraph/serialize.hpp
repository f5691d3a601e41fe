#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "specgraph/cluster_edit.hpp"
#include "specgraph/increment.hpp"
#include "specgraph/probe.hpp"
#include "specgraph/recursion.hpp"
#include "specgraph/spectrum.hpp"
#include "specgraph/structure.hpp"
#include "specgraph/surplus.hpp"

namespace specgraph {

using Json = nlohmann::ordered_json;

inline Json to_json(const Spectrum& s, bool with_vectors = false) {
  Json j;
  j["lambdas"] = std::vector<double>(s.lambdas.data(),
                                     s.lambdas.data() + s.lambdas.size());
  j["residual"] = s.residual;
  if (with_vectors) {
    Json vecs = Json::array();
    for (int i = 0; i < s.n; ++i)
      vecs.push_back(std::vector<double>(s.vectors.col(i).data(),
                                         s.vectors.col(i).data() + s.n));
    j["vectors"] = std::move(vecs);
  }
  return j;
}

inline Json to_json(const RecursionReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json row;
    row["T"] = r.t;
    row["S_T"] = r.s_t;
    row["rhs"] = r.rhs;
    row["ratio"] = r.ratio;
    row["pass"] = to_string(r.status);
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(std::move(row));
  }
  Json j;
  j["context"] = rep.context;
  j["overall"] = to_string(rep.overall);
  j["worst_ratio"] = rep.worst_ratio;
  j["rows"] = std::move(rows);
  return j;
}

inline Json to_json(const SurplusCertificate& cert,
                    bool with_witness = false) {
  Json j;
  j["kind"] = to_string(cert.kind);
  j["target"] = to_string(cert.target);
  j["direction"] = to_string(cert.direction);
  j["value"] = cert.value;
  std::string ref = "none";
  if (cert.cut_witness) ref = "cut";
  if (cert.factor_witness) ref = "factor-rows";
  if (cert.dual_witness) ref = "uniform-dual";
  j["witnessRef"] = ref;
  if (with_witness) {
    if (cert.cut_witness) {
      Json side = Json::array();
      for (bool b : cert.cut_witness->side) side.push_back(b ? 1 : 0);
      j["witness"] = {{"side", std::move(side)},
                      {"cutEdges", cert.cut_witness->cut_edges}};
    } else if (cert.factor_witness) {
      Json rows = Json::array();
      for (int v = 0; v < cert.factor_witness->rows(); ++v) {
        std::vector<double> row(
            cert.factor_witness->cols());
        for (int c = 0; c < cert.factor_witness->cols(); ++c)
          row[static_cast<std::size_t>(c)] = (*cert.factor_witness)(v, c);
        rows.push_back(std::move(row));
      }
      j["witness"] = {{"factorRows", std::move(rows)}};
    } else if (cert.dual_witness) {
      j["witness"] = {{"uniformDual", *cert.dual_witness}};
    }
  }
  return j;
}

inline Json to_json(const ClusterEditResult& r) {
  Json j;
  j["editCount"] = r.edit_count;
  j["mode"] = r.mode == ClusterEditResult::Mode::Exact ? "exact"
                                                       : "pivot-heuristic";
  j["partition"] = r.partition;
  return j;
}

inline Json to_json(const BadPairCensus& c) {
  Json j;
  j["smallPart"] = c.small_part;
  j["impure"] = c.impure;
  j["contradiction"] = c.contradiction;
  j["total"] = c.total;
  j["bound"] = c.bound;
  j["hypothesisOk"] = c.hypothesis_ok;
  j["claim3"] = to_string(c.claim3);
  return j;
}

inline Json to_json(const StructureVerdict& v) {
  Json j;
  j["outcome"] = to_string(v.outcome);
  j["tailMass"] = v.tail_mass;
  j["tailBound"] = v.tail_bound;
  j["gamma"] = v.params.gamma;
  j["delta"] = v.params.delta;
  j["eta"] = v.params.eta;
  j["mu"] = v.params.mu;
  j["paperPartCountLog10"] = paper_part_count_log10(v.params.gamma);
  if (v.witness) {
    Json w;
    w["rayleigh"] = v.witness->rayleigh;
    w["parts"] = {v.witness->part_i, v.witness->part_j, v.witness->part_k};
    w["x"] = std::vector<double>(v.witness->x.data(),
                                 v.witness->x.data() + v.witness->x.size());
    j["witness"] = std::move(w);
  }
  j["census"] = to_json(v.census);
  j["cherries"] = v.cherry_total;
  j["cherryBound"] = v.cherry_bound;
  j["cherryCheck"] = to_string(v.cherry_check);
  if (v.edit_certificate) j["editCertificate"] = to_json(*v.edit_certificate);
  return j;
}

inline Json to_json(const IncrementTrace& t) {
  Json rows = Json::array();
  for (const auto& s : t.steps) {
    Json row;
    row["step"] = s.step;
    row["n_i"] = s.n;
    row["p_i"] = s.p;
    row["case"] = to_string(s.tag);
    row["peeled"] = s.peeled;
    row["potential"] = s.pot;
    rows.push_back(std::move(row));
  }
  Json j;
  j["terminal"] = to_string(t.terminal);
  j["finalN"] = t.final_n;
  j["finalDensity"] = t.final_density;
  j["potentialMonotone"] = t.potential_monotone;
  j["regimeCap"] = t.regime_cap;
  j["steps"] = std::move(rows);
  return j;
}

inline Json to_json(const TruncationReport& rep) {
  auto rows = [](const std::vector<TruncationPairRow>& part) {
    Json out = Json::array();
    for (const auto& r : part) {
      Json row;
      row["pair"] = r.j >= 0 ? Json::array({r.i, r.j}) : Json::array({r.i});
      row["mean"] = r.mean;
      row["stderr"] = r.stderr_;
      row["bound"] = r.bound;
      row["pass"] = r.pass;
      out.push_back(std::move(row));
    }
    return out;
  };
  Json j;
  j["T"] = rep.threshold;
  j["beta"] = rep.beta;
  j["samples"] = rep.samples;
  j["part1"] = rows(rep.part1);
  j["part2"] = rows(rep.part2);
  j["pass"] = rep.pass;
  return j;
}

// CSV mirror of an array of flat JSON rows: header from the first row's
// keys, one line per row.
inline std::string csv_from_rows(const Json& rows) {
  if (!rows.is_array() || rows.empty()) return "";
  std::string out;
  const Json& first = rows.front();
  bool lead = true;
  for (auto it = first.begin(); it != first.end(); ++it) {
    if (!lead) out += ",";
    out += it.key();
    lead = false;
  }
  out += "\n";
  for (const auto& row : rows) {
    lead = true;
    for (auto it = first.begin(); it != first.end(); ++it) {
      if (!lead) out += ",";
      lead = false;
      if (row.contains(it.key())) {
        const Json& v = row.at(it.key());
        out += v.is_string() ? v.get<std::string>() : v.dump();
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace specgraph
