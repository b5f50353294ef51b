#pragma once

// File formats. Matrices are row-major nested JSON arrays; frames for the
// Parseval construction are CSV with one vector per row.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "obliq/fusion.hpp"

namespace obliq::io {

using Json = nlohmann::json;

struct SubspaceEntry {
  Matrix basis;  // N x k
  double weight = 1.0;
  std::optional<Matrix> nullspace;  // N x (N - k)
};

/// {"ambient_dim": N, "subspaces": [{"basis": [[..]], "weight": w, "nullspace": [[..]]}]}
struct SubspaceFile {
  Index ambient_dim = 0;
  std::vector<SubspaceEntry> subspaces;
};

struct ProjectionEntry {
  Matrix matrix;
  double weight = 1.0;
};

/// {"ambient_dim": N, "projections": [{"matrix": [[..]], "weight": w}]}
struct ProjectionFile {
  Index ambient_dim = 0;
  std::vector<ProjectionEntry> projections;
};

/// Throws Error(ParseError) for malformed input.
Matrix matrix_from_json(const Json& j, const std::string& what);
Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vector& v);

SubspaceFile parse_subspace_file(const Json& j);
ProjectionFile parse_projection_file(const Json& j);
Json to_json(const SubspaceFile& f);
Json to_json(const ProjectionFile& f);

/// ReportFile: the operator report plus per-member diagnostics.
Json report_to_json(const OperatorReport& report, const std::vector<ProjectionDiagnostics>& members);
Json report_file(const FusionFrame& frame, const Tolerances& tol);

Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& j);

/// CSV, one vector per row, returned as N x M with vectors as columns.
Matrix read_frame_csv(const std::filesystem::path& path);
void write_frame_csv(const std::filesystem::path& path, const Matrix& vectors);

}  // namespace obliq::io
