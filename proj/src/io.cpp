// Copyright 2026 The sepcrit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sepcrit/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace sepcrit::io {

using nlohmann::json;

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Complex parse_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(path + ": expected [re, im] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string verdict(bool separable) { return separable ? "separable" : "entangled"; }

json cross_check_json(const CrossCheck& c) {
  json j;
  if (c.ppt) j["ppt"] = *c.ppt;
  if (c.ppt_min_eigenvalue) j["ppt_min_eigenvalue"] = *c.ppt_min_eigenvalue;
  if (c.wootters) j["wootters"] = *c.wootters;
  j["disagreement"] = c.disagreement;
  return j;
}

std::string cross_check_csv(const CrossCheck& c) {
  std::string s;
  s += "," + (c.ppt ? std::string(*c.ppt ? "true" : "false") : "");
  s += "," + (c.ppt_min_eigenvalue ? num(*c.ppt_min_eigenvalue) : "");
  s += "," + (c.wootters ? num(*c.wootters) : "");
  s += "," + std::string(c.disagreement ? "true" : "false");
  return s;
}

std::string cross_check_text(const CrossCheck& c) {
  std::ostringstream os;
  os << "cross-check:\n";
  if (c.ppt) {
    os << "  ppt (all single-subsystem cuts): " << (*c.ppt ? "yes" : "no");
    if (c.ppt_min_eigenvalue) os << "  (min eigenvalue " << short_num(*c.ppt_min_eigenvalue) << ")";
    os << "\n";
  }
  if (c.wootters) os << "  wootters concurrence: " << short_num(*c.wootters) << "\n";
  os << "  disagreement: " << (c.disagreement ? "YES" : "no") << "\n";
  return os.str();
}

std::string csv_common(const ReportContext& ctx, double value, bool separable,
                       int restarts) {
  return csv_escape(ctx.state_id) + "," + ctx.dims + "," + num(value) + "," +
         verdict(separable) + "," + std::to_string(restarts) + "," +
         std::to_string(ctx.seed) + "," + (ctx.wall_time_s ? num(*ctx.wall_time_s) : "");
}

}  // namespace

LoadedState parse_state(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("state file: top level must be an object");

  if (j.contains("schema") && j["schema"] != kStateSchema) {
    throw Error("schema: expected \"" + std::string(kStateSchema) + "\"");
  }
  if (j.contains("version") &&
      (!j["version"].is_number_integer() || j["version"].get<int>() != kStateSchemaVersion)) {
    throw Error("version: unsupported, expected " + std::to_string(kStateSchemaVersion));
  }

  if (!j.contains("dims") || !j["dims"].is_array()) throw Error("dims: missing or not a list");
  std::vector<int> dv;
  for (std::size_t i = 0; i < j["dims"].size(); ++i) {
    const auto& d = j["dims"][i];
    if (!d.is_number_integer()) throw Error("dims[" + std::to_string(i) + "]: not an integer");
    dv.push_back(d.get<int>());
  }
  const SubsystemDims dims(dv);
  const auto n = static_cast<Eigen::Index>(dims.total());

  if (!j.contains("kind") || !j["kind"].is_string()) throw Error("kind: missing");
  const auto kind = j["kind"].get<std::string>();
  if (!j.contains("data") || !j["data"].is_array()) throw Error("data: missing or not a list");
  const auto& data = j["data"];

  LoadedState out{PureState(SubsystemDims({2, 2}), CVector::Unit(4, 0)), {}, {}};
  if (j.contains("metadata")) {
    const auto& m = j["metadata"];
    if (!m.is_object()) throw Error("metadata: not an object");
    if (m.contains("name") && m["name"].is_string()) out.metadata.name = m["name"].get<std::string>();
    if (m.contains("seed") && m["seed"].is_number_unsigned()) {
      out.metadata.seed = m["seed"].get<std::uint64_t>();
    }
  }

  if (kind == "pure") {
    if (static_cast<Eigen::Index>(data.size()) != n) {
      throw Error("data: expected " + std::to_string(n) + " amplitudes for dims " +
                  dims.to_string() + ", got " + std::to_string(data.size()));
    }
    CVector a(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      a[i] = parse_complex(data[static_cast<std::size_t>(i)], "data[" + std::to_string(i) + "]");
    }
    const double norm = a.norm();
    if (std::abs(norm - 1.0) > kNormWarnThreshold) {
      out.warnings.push_back("amplitudes renormalized (norm was " + short_num(norm) + ")");
    }
    out.state = make_pure(dims, a);
  } else if (kind == "mixed") {
    if (static_cast<Eigen::Index>(data.size()) != n) {
      throw Error("data: expected " + std::to_string(n) + " rows for dims " +
                  dims.to_string() + ", got " + std::to_string(data.size()));
    }
    CMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const auto& row = data[static_cast<std::size_t>(r)];
      const std::string rp = "data[" + std::to_string(r) + "]";
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
        throw Error(rp + ": expected a row of " + std::to_string(n) + " entries");
      }
      for (Eigen::Index c = 0; c < n; ++c) {
        m(r, c) = parse_complex(row[static_cast<std::size_t>(c)],
                                rp + "[" + std::to_string(c) + "]");
      }
    }
    out.state = DensityMatrix(dims, m);
  } else {
    throw Error("kind: expected \"pure\" or \"mixed\", got \"" + kind + "\"");
  }
  return out;
}

LoadedState read_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open state file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_state(ss.str());
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

std::string write_state(const zoo::State& state, const StateMetadata& meta) {
  // Hand-laid JSON: one amplitude (pure) or one matrix row (mixed) per line.
  std::ostringstream os;
  const SubsystemDims& dims = std::visit([](const auto& s) -> const SubsystemDims& {
    return s.dims();
  }, state);
  const auto* pure = std::get_if<PureState>(&state);
  os << "{\n  \"schema\": " << json(kStateSchema).dump() << ",\n  \"version\": "
     << kStateSchemaVersion << ",\n  \"dims\": " << json(dims.values()).dump()
     << ",\n  \"kind\": \"" << (pure ? "pure" : "mixed") << "\",\n  \"data\": [\n";
  if (pure) {
    const auto& a = pure->amplitudes();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      os << "    " << complex_json(a[i]).dump() << (i + 1 < a.size() ? ",\n" : "\n");
    }
  } else {
    const CMatrix& m = std::get<DensityMatrix>(state).matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
      os << "    " << row.dump() << (r + 1 < m.rows() ? ",\n" : "\n");
    }
  }
  os << "  ]";
  if (meta.name || meta.seed) {
    json m = json::object();
    if (meta.name) m["name"] = *meta.name;
    if (meta.seed) m["seed"] = *meta.seed;
    os << ",\n  \"metadata\": " << m.dump();
  }
  os << "\n}\n";
  return os.str();
}

std::string csv_header(bool cross_check) {
  std::string h = "state_id,dims,value,verdict,restarts,seed,wall_time_s";
  if (cross_check) h += ",ppt,ppt_min_eig,wootters,disagreement";
  return h;
}

std::string write_report(const PureCriterionReport& report, const ReportContext& ctx,
                         Format format) {
  switch (format) {
    case Format::Json: {
      json j;
      j["criterion"] = "pure";
      j["state_id"] = ctx.state_id;
      j["dims"] = ctx.dims;
      j["value"] = report.total;
      j["verdict"] = verdict(report.separable);
      j["tolerance"] = report.tolerance;
      json ops = json::array();
      for (const auto& t : report.per_operator) {
        ops.push_back({{"operator", t.tag}, {"magnitude", t.magnitude}});
      }
      j["per_operator"] = std::move(ops);
      if (ctx.wall_time_s) j["wall_time_s"] = *ctx.wall_time_s;
      if (ctx.cross_check) j["cross_check"] = cross_check_json(*ctx.cross_check);
      return j.dump(2) + "\n";
    }
    case Format::CsvRow: {
      std::string row = csv_common(ctx, report.total, report.separable, 0);
      if (ctx.cross_check) row += cross_check_csv(*ctx.cross_check);
      return row + "\n";
    }
    case Format::Text: {
      std::ostringstream os;
      os << "state:     " << ctx.state_id << "  (dims " << ctx.dims << ")\n"
         << "criterion: pure |C(psi)|\n"
         << "value:     " << num(report.total) << "\n"
         << "verdict:   " << verdict(report.separable) << "  (tol " << short_num(report.tolerance)
         << ")\n\n";
      std::size_t width = 8;
      for (const auto& t : report.per_operator) width = std::max(width, t.tag.size());
      os << std::left << std::setw(static_cast<int>(width)) << "operator" << "  magnitude\n";
      for (const auto& t : report.per_operator) {
        os << std::left << std::setw(static_cast<int>(width)) << t.tag << "  "
           << short_num(t.magnitude) << "\n";
      }
      if (ctx.cross_check) os << "\n" << cross_check_text(*ctx.cross_check);
      return os.str();
    }
  }
  return {};
}

std::string write_report(const MixedCriterionReport& report, const ReportContext& ctx,
                         Format format) {
  const auto& w = report.best.weights;
  switch (format) {
    case Format::Json: {
      json j;
      j["criterion"] = "mixed";
      j["state_id"] = ctx.state_id;
      j["dims"] = ctx.dims;
      j["value"] = report.value;
      j["verdict"] = verdict(report.separable);
      j["tolerance"] = report.tolerance;
      j["best_objective"] = report.best.objective;
      j["rank"] = report.rank;
      j["family_size"] = report.family_size;
      j["seed"] = ctx.seed;
      j["restarts"] = report.restarts;
      j["evaluations"] = report.evaluations;
      j["converged_restarts"] = report.converged_restarts;
      j["converged"] = report.converged;
      json sv = json::array();
      for (Eigen::Index i = 0; i < report.best.singular_values.size(); ++i) {
        sv.push_back(report.best.singular_values[i]);
      }
      j["singular_values"] = std::move(sv);
      json weights = json::array();
      for (Eigen::Index a = 0; a < w.size(); ++a) {
        json entry = {{"weight", complex_json(w[a])}};
        if (static_cast<std::size_t>(a) < ctx.operator_tags.size()) {
          entry["operator"] = ctx.operator_tags[static_cast<std::size_t>(a)];
        }
        weights.push_back(std::move(entry));
      }
      j["best_weights"] = std::move(weights);
      if (ctx.wall_time_s) j["wall_time_s"] = *ctx.wall_time_s;
      if (ctx.cross_check) j["cross_check"] = cross_check_json(*ctx.cross_check);
      return j.dump(2) + "\n";
    }
    case Format::CsvRow: {
      std::string row = csv_common(ctx, report.value, report.separable, report.restarts);
      if (ctx.cross_check) row += cross_check_csv(*ctx.cross_check);
      return row + "\n";
    }
    case Format::Text: {
      std::ostringstream os;
      os << "state:       " << ctx.state_id << "  (dims " << ctx.dims << ")\n"
         << "criterion:   mixed C(rho)\n"
         << "value:       " << num(report.value) << "\n"
         << "verdict:     " << verdict(report.separable) << "  (tol "
         << short_num(report.tolerance) << ")\n"
         << "rank:        " << report.rank << "\n"
         << "operators:   " << report.family_size << "\n"
         << "restarts:    " << report.restarts << " (" << report.converged_restarts
         << " converged, " << report.evaluations << " evaluations, seed " << ctx.seed << ")\n"
         << "best restart converged: " << (report.converged ? "yes" : "no") << "\n\n";
      std::size_t width = 8;
      for (const auto& t : ctx.operator_tags) width = std::max(width, t.size());
      os << std::left << std::setw(static_cast<int>(width)) << "operator"
         << "  |z|            arg z\n";
      for (Eigen::Index a = 0; a < w.size(); ++a) {
        const auto idx = static_cast<std::size_t>(a);
        const std::string tag =
            idx < ctx.operator_tags.size() ? ctx.operator_tags[idx] : "#" + std::to_string(idx);
        os << std::left << std::setw(static_cast<int>(width)) << tag << "  "
           << std::setw(14) << short_num(std::abs(w[a])) << " " << short_num(std::arg(w[a]))
           << "\n";
      }
      if (ctx.cross_check) os << "\n" << cross_check_text(*ctx.cross_check);
      return os.str();
    }
  }
  return {};
}

}  // namespace sepcrit::io
