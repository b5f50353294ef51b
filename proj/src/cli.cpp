#include "obliq/cli.hpp"

#include <cmath>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "obliq/constructions.hpp"
#include "obliq/io.hpp"
#include "obliq/random.hpp"

namespace obliq {

namespace {

namespace fs = std::filesystem;
using io::Json;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kAnalyticFailure = 2;

void add_tolerances(CLI::App* cmd, Tolerances& tol) {
  cmd->add_option("--tol-rank", tol.rank, "relative rank threshold");
  cmd->add_option("--tol-eq", tol.eq, "entrywise equality threshold");
  cmd->add_option("--tol-eig", tol.eig, "eigenvalue threshold");
}

void emit(const Json& j, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << j.dump(2) << '\n';
  } else {
    io::write_json(output, j);
  }
}

IndexSet parse_indices(const std::vector<long long>& raw, Index ambient, const char* what) {
  IndexSet out;
  for (long long v : raw) {
    if (v < 0 || static_cast<Index>(v) >= ambient) {
      throw Error(ErrorCode::InvalidArgument, std::string(what) + " index out of range");
    }
    out.push_back(static_cast<Index>(v));
  }
  return out;
}

io::ProjectionFile projection_file(const FusionFrame& frame) {
  io::ProjectionFile f;
  f.ambient_dim = frame.ambient();
  for (const auto& m : frame.members()) f.projections.push_back({m.projection.matrix(), m.weight});
  return f;
}

Json index_json(const IndexSet& s) { return Json(s); }

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  std::string input;
  std::string strategy = "orthogonal";
  std::string output;
  Tolerances tol;
};

ObliqueProjection build(const io::SubspaceEntry& e, const std::string& strategy, Index i,
                        const Tolerances& tol) {
  const Subspace w(e.basis, tol);
  if (strategy == "orthogonal") return orthogonal_projector(w, tol);
  if (strategy == "block-sparse") return block_sparse_projection(w, tol).projection;
  if (strategy == "triangular") return triangular_projection(w, tol).projection;
  if (!e.nullspace) {
    if (w.dim() == w.ambient()) return oblique(w, std::optional<Subspace>{}, tol);
    throw Error(ErrorCode::StrategyError, "subspaces[" + std::to_string(i) + "] has no nullspace");
  }
  return oblique(w, Subspace(*e.nullspace, tol), tol);
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  a.tol.validate();
  const auto file = io::parse_subspace_file(io::read_json(a.input));
  std::vector<WeightedProjection> members;
  for (Index i = 0; i < file.subspaces.size(); ++i) {
    members.push_back({build(file.subspaces[i], a.strategy, i, a.tol), file.subspaces[i].weight});
  }
  const FusionFrame frame(std::move(members));
  const Json report = io::report_file(frame, a.tol);
  emit(report, a.output, out);
  return report["is_frame"].get<bool>() ? kOk : kAnalyticFailure;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::string output;
  Tolerances tol;
  // parseval
  std::string frame_csv;
  std::string weighting = "count";
  // diagonal
  Index dim = 0;
  std::vector<long long> support;
  std::vector<double> entries;
  std::vector<long long> adjustable;
  // tight-pair, tight-chain
  std::string input;
  Index k = 0;
  Index count = 0;
  Index remainder = 0;
};

void write_construction(const ConstructArgs& a, const FusionFrame& frame) {
  fs::create_directories(a.output);
  io::write_json(fs::path(a.output) / "projections.json", io::to_json(projection_file(frame)));
  io::write_json(fs::path(a.output) / "report.json", io::report_file(frame, a.tol));
}

Subspace first_subspace(const std::string& path, const Tolerances& tol) {
  const auto file = io::parse_subspace_file(io::read_json(path));
  return Subspace(file.subspaces.front().basis, tol);
}

int construct_parseval(const ConstructArgs& a) {
  const auto weighting =
      a.weighting == "pooled" ? ParsevalWeighting::PooledGram : ParsevalWeighting::CoordinateCount;
  const auto c = parseval_from_frame(io::read_frame_csv(a.frame_csv), weighting, a.tol);
  write_construction(a, c.frame);
  const Json details{{"order", index_json(c.order)},
                     {"pivots", index_json(c.pivots)},
                     {"repeats", c.repeats},
                     {"weights_squared", io::vector_to_json(c.weights_squared)},
                     {"duals", io::matrix_to_json(c.duals.transpose())},
                     {"parseval_vectors", io::matrix_to_json(c.parseval_vectors.transpose())}};
  io::write_json(fs::path(a.output) / "parseval.json", details);
  return kOk;
}

int construct_diagonal(const ConstructArgs& a) {
  if (a.dim == 0) throw Error(ErrorCode::InvalidArgument, "--dim must be positive");
  std::optional<IndexSet> adjustable;
  if (!a.adjustable.empty()) adjustable = parse_indices(a.adjustable, a.dim, "--adjustable");
  const auto p = prescribed_diagonal(a.dim, parse_indices(a.support, a.dim, "--support"), a.entries,
                                     adjustable, a.tol);
  write_construction(a, FusionFrame::unweighted({p.projection}));
  return kOk;
}

int construct_tight_pair(const ConstructArgs& a) {
  const auto fam = tight_pair(first_subspace(a.input, a.tol), a.tol);
  write_construction(a, fam.frame());
  return kOk;
}

int construct_tight_chain(const ConstructArgs& a) {
  if (a.count == 0) throw Error(ErrorCode::InvalidArgument, "--L must be positive");
  const auto fam = a.input.empty() ? tight_chain(a.k, a.count, a.tol)
                                   : tight_chain_general(first_subspace(a.input, a.tol), a.count, a.tol);
  write_construction(a, fam.frame());
  return kOk;
}

int construct_residual_chain(const ConstructArgs& a) {
  const auto r = residual_chain(a.k, a.count, a.remainder, a.tol);
  write_construction(a, r.family.frame());
  const Json details{{"stated_pattern", io::vector_to_json(r.stated_pattern)},
                     {"achieved_diagonal", io::vector_to_json(r.achieved_diagonal)},
                     {"achieved_spectrum", io::vector_to_json(r.family.achieved_spectrum)},
                     {"matches_stated", r.matches_stated},
                     {"supports", r.family.supports}};
  io::write_json(fs::path(a.output) / "residual.json", details);
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string input;
  std::string target = "frame";
  std::optional<double> lambda;
  std::string output;
  Tolerances tol;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  a.tol.validate();
  const auto file = io::parse_projection_file(io::read_json(a.input));
  std::vector<WeightedProjection> members;
  for (Index i = 0; i < file.projections.size(); ++i) {
    try {
      members.push_back({ObliqueProjection::from_matrix(file.projections[i].matrix, a.tol),
                         file.projections[i].weight});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotAProjection) throw;
      throw Error(ErrorCode::NotAProjection, "projections[" + std::to_string(i) + "] is not idempotent");
    }
  }
  const FusionFrame frame(std::move(members));
  Json report = io::report_file(frame, a.tol);
  bool pass = false;
  if (a.target == "frame") {
    pass = report["is_frame"].get<bool>();
  } else if (a.target == "tight") {
    pass = report["is_tight"].get<bool>();
  } else if (a.target == "diagonal") {
    pass = report["is_diagonal"].get<bool>();
  } else {
    pass = report["is_identity_multiple"].get<bool>();
    if (pass && a.lambda) {
      const double c = report["tight_constant"].get<double>();
      pass = std::abs(c - *a.lambda) <= a.tol.eq * std::max(1.0, std::abs(*a.lambda));
    }
  }
  report["target"] = a.target;
  report["pass"] = pass;
  emit(report, a.output, out);
  if (!pass) err << "target '" << a.target << "' not met\n";
  return pass ? kOk : kAnalyticFailure;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  std::uint64_t seed = 0;
  Index dim = 3;
  Index k = 1;
  Index count = 0;
  std::string output;
};

int generate_frame(const GenerateArgs& a, std::ostream& out) {
  random::Engine rng(a.seed);
  const Index m = a.count ? a.count : 2 * a.dim;
  const Matrix x = random::frame(rng, a.dim, m);
  if (a.output.empty()) {
    out.precision(17);
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
      for (Eigen::Index r = 0; r < x.rows(); ++r) out << (r ? "," : "") << x(r, c);
      out << '\n';
    }
  } else {
    io::write_frame_csv(a.output, x);
  }
  return kOk;
}

int generate_subspace(const GenerateArgs& a, std::ostream& out) {
  if (a.k == 0 || a.k > a.dim) throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= N");
  random::Engine rng(a.seed);
  io::SubspaceFile f;
  f.ambient_dim = a.dim;
  const Index count = a.count ? a.count : 1;
  for (Index i = 0; i < count; ++i) f.subspaces.push_back({random::subspace(rng, a.dim, a.k).basis(), 1.0, {}});
  emit(io::to_json(f), a.output, out);
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oblique fusion frames: analysis and constructions"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "build projections for a subspace file and report S");
  an->add_option("--input", analyze.input, "SubspaceFile (JSON)")->required()->check(CLI::ExistingFile);
  an->add_option("--strategy", analyze.strategy, "projection strategy")
      ->check(CLI::IsMember({"orthogonal", "block-sparse", "triangular", "oblique"}));
  an->add_option("--output", analyze.output, "report path (stdout when omitted)");
  add_tolerances(an, analyze.tol);

  ConstructArgs construct;
  auto* co = app.add_subcommand("construct", "run a construction and write its projections");
  co->require_subcommand(1);
  auto* par = co->add_subcommand("parseval", "Parseval fusion frame from a CSV frame");
  par->add_option("--frame", construct.frame_csv, "CSV, one vector per row")->required()->check(CLI::ExistingFile);
  par->add_option("--weighting", construct.weighting)->check(CLI::IsMember({"count", "pooled"}));
  auto* dia = co->add_subcommand("diagonal", "projection with a prescribed diagonal Gram");
  dia->add_option("--dim", construct.dim, "ambient dimension N")->required();
  dia->add_option("--support", construct.support, "support indices")->required()->delimiter(',');
  dia->add_option("--entries", construct.entries, "diagonal entries on the support")->required()->delimiter(',');
  dia->add_option("--adjustable", construct.adjustable, "support indices allowed to exceed one")->delimiter(',');
  auto* tp = co->add_subcommand("tight-pair", "two projections with sum 2I");
  tp->add_option("--input", construct.input, "SubspaceFile; the first subspace is used")
      ->required()
      ->check(CLI::ExistingFile);
  auto* tc = co->add_subcommand("tight-chain", "L projections with sum L I");
  auto* tc_k = tc->add_option("--k", construct.k, "subspace dimension (canonical chain)");
  auto* tc_in = tc->add_option("--input", construct.input, "SubspaceFile; the first subspace is used")
                    ->check(CLI::ExistingFile);
  tc_k->excludes(tc_in);
  tc->add_option("--L", construct.count, "number of projections")->required();
  auto* rc = co->add_subcommand("residual-chain", "chains for N = kL + M");
  rc->add_option("--k", construct.k)->required();
  rc->add_option("--L", construct.count)->required();
  rc->add_option("--M", construct.remainder)->required();
  co->add_option("--output", construct.output, "output directory")->required();
  add_tolerances(co, construct.tol);
  for (auto* sub : {par, dia, tp, tc, rc}) sub->fallthrough();

  VerifyArgs verify;
  auto* ve = app.add_subcommand("verify", "check a ProjectionFile against a target");
  ve->add_option("--input", verify.input, "ProjectionFile (JSON)")->required()->check(CLI::ExistingFile);
  ve->add_option("--target", verify.target)->check(CLI::IsMember({"frame", "tight", "diagonal", "identity"}));
  ve->add_option("--lambda", verify.lambda, "required constant for target identity");
  ve->add_option("--output", verify.output, "report path (stdout when omitted)");
  add_tolerances(ve, verify.tol);

  GenerateArgs generate;
  auto* ge = app.add_subcommand("generate", "seeded random test data");
  ge->require_subcommand(1);
  auto* gf = ge->add_subcommand("frame", "Gaussian frame as CSV");
  gf->add_option("--dim", generate.dim, "N");
  gf->add_option("--count", generate.count, "number of vectors (default 2N)");
  auto* gs = ge->add_subcommand("subspace", "Gaussian subspaces as a SubspaceFile");
  gs->add_option("--dim", generate.dim, "N");
  gs->add_option("--k", generate.k, "subspace dimension");
  gs->add_option("--count", generate.count, "number of subspaces (default 1)");
  ge->add_option("--seed", generate.seed, "RNG seed");
  ge->add_option("--output", generate.output, "output path (stdout when omitted)");
  for (auto* sub : {gf, gs}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*an) return cmd_analyze(analyze, out);
    if (*ve) return cmd_verify(verify, out, err);
    if (*co) {
      construct.tol.validate();
      if (*par) return construct_parseval(construct);
      if (*dia) return construct_diagonal(construct);
      if (*tp) return construct_tight_pair(construct);
      if (*tc) {
        if (construct.input.empty() && construct.k == 0) {
          throw Error(ErrorCode::InvalidArgument, "tight-chain needs --k or --input");
        }
        return construct_tight_chain(construct);
      }
      return construct_residual_chain(construct);
    }
    return *gf ? generate_frame(generate, out) : generate_subspace(generate, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace obliq
