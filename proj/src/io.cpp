#include "obliq/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace obliq::io {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) parse_error(what + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) parse_error(what + ": non-finite number");
  return v;
}

Index dimension(const Json& j) {
  if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_integer() || j["ambient_dim"].get<long long>() < 1) {
    parse_error("ambient_dim must be a positive integer");
  }
  return j["ambient_dim"].get<Index>();
}

double weight_of(const Json& entry, const std::string& what) {
  if (!entry.contains("weight")) return 1.0;
  const double w = number(entry["weight"], what + ".weight");
  if (w <= 0.0) parse_error(what + ".weight must be positive");
  return w;
}

}  // namespace

Matrix matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) parse_error(what + ": expected a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) parse_error(what + ": rows must be nonempty arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      parse_error(what + ": ragged rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = number(row[static_cast<std::size_t>(c)], what);
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

SubspaceFile parse_subspace_file(const Json& j) {
  if (!j.is_object()) parse_error("subspace file must be a JSON object");
  SubspaceFile f;
  f.ambient_dim = dimension(j);
  if (!j.contains("subspaces") || !j["subspaces"].is_array() || j["subspaces"].empty()) {
    parse_error("subspaces must be a nonempty array");
  }
  const auto n = static_cast<Eigen::Index>(f.ambient_dim);
  for (std::size_t i = 0; i < j["subspaces"].size(); ++i) {
    const Json& e = j["subspaces"][i];
    const std::string what = "subspaces[" + std::to_string(i) + "]";
    if (!e.is_object() || !e.contains("basis")) parse_error(what + " needs a basis");
    SubspaceEntry entry;
    entry.basis = matrix_from_json(e["basis"], what + ".basis");
    if (entry.basis.rows() != n || entry.basis.cols() > n) {
      parse_error(what + ".basis must have N rows and at most N columns");
    }
    entry.weight = weight_of(e, what);
    if (e.contains("nullspace") && !e["nullspace"].is_null()) {
      entry.nullspace = matrix_from_json(e["nullspace"], what + ".nullspace");
      if (entry.nullspace->rows() != n || entry.nullspace->cols() != n - entry.basis.cols()) {
        parse_error(what + ".nullspace must be N x (N - k)");
      }
    }
    f.subspaces.push_back(std::move(entry));
  }
  return f;
}

ProjectionFile parse_projection_file(const Json& j) {
  if (!j.is_object()) parse_error("projection file must be a JSON object");
  ProjectionFile f;
  f.ambient_dim = dimension(j);
  if (!j.contains("projections") || !j["projections"].is_array() || j["projections"].empty()) {
    parse_error("projections must be a nonempty array");
  }
  const auto n = static_cast<Eigen::Index>(f.ambient_dim);
  for (std::size_t i = 0; i < j["projections"].size(); ++i) {
    const Json& e = j["projections"][i];
    const std::string what = "projections[" + std::to_string(i) + "]";
    if (!e.is_object() || !e.contains("matrix")) parse_error(what + " needs a matrix");
    ProjectionEntry entry;
    entry.matrix = matrix_from_json(e["matrix"], what + ".matrix");
    if (entry.matrix.rows() != n || entry.matrix.cols() != n) parse_error(what + ".matrix must be N x N");
    entry.weight = weight_of(e, what);
    f.projections.push_back(std::move(entry));
  }
  return f;
}

Json to_json(const SubspaceFile& f) {
  Json subs = Json::array();
  for (const auto& s : f.subspaces) {
    Json e{{"basis", matrix_to_json(s.basis)}, {"weight", s.weight}};
    if (s.nullspace) e["nullspace"] = matrix_to_json(*s.nullspace);
    subs.push_back(std::move(e));
  }
  return Json{{"ambient_dim", f.ambient_dim}, {"subspaces", std::move(subs)}};
}

Json to_json(const ProjectionFile& f) {
  Json ps = Json::array();
  for (const auto& p : f.projections) ps.push_back(Json{{"matrix", matrix_to_json(p.matrix)}, {"weight", p.weight}});
  return Json{{"ambient_dim", f.ambient_dim}, {"projections", std::move(ps)}};
}

Json report_to_json(const OperatorReport& r, const std::vector<ProjectionDiagnostics>& members) {
  Json per = Json::array();
  for (const auto& d : members) {
    per.push_back(Json{{"idempotency_residual", d.idempotency_residual},
                       {"gram_nnz", d.gram_nnz},
                       {"gram_diagonal", vector_to_json(d.gram_diagonal)}});
  }
  return Json{{"operator", matrix_to_json(r.op)},
              {"lower_bound", r.lower},
              {"upper_bound", r.upper},
              {"is_frame", r.is_frame},
              {"is_tight", r.is_tight},
              {"tight_constant", r.tight_constant ? Json(*r.tight_constant) : Json(nullptr)},
              {"is_diagonal", r.is_diagonal},
              {"is_identity_multiple", r.is_identity_multiple},
              {"nnz", r.nnz},
              {"block_pattern", r.block_pattern},
              {"per_projection", std::move(per)}};
}

Json report_file(const FusionFrame& frame, const Tolerances& tol) {
  std::vector<ProjectionDiagnostics> diags;
  for (const auto& m : frame.members()) diags.push_back(diagnose(m.projection, tol));
  return report_to_json(structure_report(frame, tol), diags);
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

Matrix read_frame_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos || !std::isfinite(v)) throw std::invalid_argument(cell);
        row.push_back(v);
      } catch (const std::exception&) {
        parse_error(path.string() + ": bad number '" + cell + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) parse_error(path.string() + ": ragged rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().empty()) parse_error(path.string() + ": no vectors");
  Matrix x(static_cast<Eigen::Index>(rows.front().size()), static_cast<Eigen::Index>(rows.size()));
  for (std::size_t c = 0; c < rows.size(); ++c) {
    for (std::size_t r = 0; r < rows[c].size(); ++r) {
      x(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[c][r];
    }
  }
  return x;
}

void write_frame_csv(const std::filesystem::path& path, const Matrix& vectors) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << std::setprecision(17);
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      if (r) out << ',';
      out << vectors(r, c);
    }
    out << '\n';
  }
}

}  // namespace obliq::io
