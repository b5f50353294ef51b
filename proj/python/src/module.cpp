#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "obliq/constructions.hpp"
#include "obliq/pffs.hpp"

namespace py = pybind11;
using namespace obliq;

namespace {

py::dict report_dict(const OperatorReport& r) {
  py::dict d;
  d["operator"] = r.op;
  d["lower_bound"] = r.lower;
  d["upper_bound"] = r.upper;
  d["is_frame"] = r.is_frame;
  d["is_tight"] = r.is_tight;
  d["tight_constant"] = r.tight_constant;
  d["is_diagonal"] = r.is_diagonal;
  d["is_identity_multiple"] = r.is_identity_multiple;
  d["nnz"] = r.nnz;
  d["block_pattern"] = r.block_pattern;
  return d;
}

FusionFrame make_frame(const std::vector<ObliqueProjection>& projections,
                       const std::optional<std::vector<double>>& weights) {
  if (!weights) return FusionFrame::unweighted(projections);
  if (weights->size() != projections.size()) {
    throw Error(ErrorCode::DimensionMismatch, "one weight per projection");
  }
  std::vector<WeightedProjection> members;
  for (std::size_t i = 0; i < projections.size(); ++i) members.push_back({projections[i], (*weights)[i]});
  return FusionFrame(std::move(members));
}

}  // namespace

PYBIND11_MODULE(_obliq, m) {
  m.doc() = "Oblique projections and fusion frames";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error;
      py::object value = exc(e.what());
      value.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), value.ptr());
    }
  });

  py::class_<Tolerances>(m, "Tolerances")
      .def(py::init([](double rank, double eq, double eig, double tight) {
             Tolerances t{rank, eq, eig, tight};
             t.validate();
             return t;
           }),
           py::arg("rank") = 1e-10, py::arg("eq") = 1e-9, py::arg("eig") = 1e-9, py::arg("tight") = 1e-8)
      .def_readwrite("rank", &Tolerances::rank)
      .def_readwrite("eq", &Tolerances::eq)
      .def_readwrite("eig", &Tolerances::eig)
      .def_readwrite("tight", &Tolerances::tight);

  py::class_<Subspace>(m, "Subspace")
      .def(py::init<Matrix, const Tolerances&>(), py::arg("basis"), py::arg("tol") = Tolerances{})
      .def_static("coordinate", &Subspace::coordinate, py::arg("ambient"), py::arg("coords"))
      .def_property_readonly("ambient", &Subspace::ambient)
      .def_property_readonly("dim", &Subspace::dim)
      .def_property_readonly("basis", &Subspace::basis);

  py::class_<ObliqueProjection>(m, "ObliqueProjection")
      .def_static("from_matrix", &ObliqueProjection::from_matrix, py::arg("matrix"), py::arg("tol") = Tolerances{})
      .def_property_readonly("matrix", &ObliqueProjection::matrix)
      .def_property_readonly("range", &ObliqueProjection::range)
      .def_property_readonly("nullspace", &ObliqueProjection::nullspace)
      .def_property_readonly("rank", &ObliqueProjection::rank)
      .def("idempotency_residual", &ObliqueProjection::idempotency_residual)
      .def("gram", [](const ObliqueProjection& p) { return gram(p).matrix; });

  m.def("oblique", py::overload_cast<const Subspace&, const std::optional<Subspace>&, const Tolerances&>(&oblique),
        py::arg("range"), py::arg("nullspace") = std::nullopt, py::arg("tol") = Tolerances{});
  m.def("orthogonal_projector", &orthogonal_projector, py::arg("w"), py::arg("tol") = Tolerances{});
  m.def(
      "block_sparse_projection",
      [](const Subspace& w, const Tolerances& tol) {
        auto c = block_sparse_projection(w, tol);
        return py::make_tuple(c.projection, c.support);
      },
      py::arg("w"), py::arg("tol") = Tolerances{});
  m.def(
      "triangular_projection",
      [](const Subspace& w, const Tolerances& tol) {
        auto t = triangular_projection(w, tol);
        return py::make_tuple(t.projection, t.order, t.permuted());
      },
      py::arg("w"), py::arg("tol") = Tolerances{});

  m.def(
      "frame_operator",
      [](const std::vector<ObliqueProjection>& ps, const std::optional<std::vector<double>>& weights) {
        return frame_operator(make_frame(ps, weights));
      },
      py::arg("projections"), py::arg("weights") = std::nullopt);
  m.def(
      "structure_report",
      [](const std::vector<ObliqueProjection>& ps, const std::optional<std::vector<double>>& weights,
         const Tolerances& tol) { return report_dict(structure_report(make_frame(ps, weights), tol)); },
      py::arg("projections"), py::arg("weights") = std::nullopt, py::arg("tol") = Tolerances{});
  m.def(
      "reconstruct",
      [](const std::vector<ObliqueProjection>& ps, const Vector& f, const std::optional<std::vector<double>>& weights,
         const Tolerances& tol) { return reconstruct(make_frame(ps, weights), f, tol); },
      py::arg("projections"), py::arg("f"), py::arg("weights") = std::nullopt, py::arg("tol") = Tolerances{});

  m.def(
      "parseval_from_frame",
      [](const Matrix& x, const std::string& weighting, const Tolerances& tol) {
        if (weighting != "count" && weighting != "pooled") {
          throw Error(ErrorCode::InvalidArgument, "weighting must be 'count' or 'pooled'");
        }
        const auto c = parseval_from_frame(
            x, weighting == "count" ? ParsevalWeighting::CoordinateCount : ParsevalWeighting::PooledGram, tol);
        py::dict d;
        d["order"] = c.order;
        d["pivots"] = c.pivots;
        d["weights_squared"] = c.weights_squared;
        d["duals"] = c.duals;
        d["parseval_vectors"] = c.parseval_vectors;
        std::vector<ObliqueProjection> ps;
        for (const auto& member : c.frame.members()) ps.push_back(member.projection);
        d["projections"] = ps;
        return d;
      },
      py::arg("x"), py::arg("weighting") = "count", py::arg("tol") = Tolerances{});
  m.def(
      "diagonal_gram_search",
      [](const Subspace& w, const Tolerances& tol) -> py::object {
        const auto r = diagonal_gram_search(w, tol);
        if (!r) return py::none();
        return py::make_tuple(r->projection, r->support, r->diagonal);
      },
      py::arg("w"), py::arg("tol") = Tolerances{});
  m.def(
      "prescribed_diagonal",
      [](Index ambient, const IndexSet& support, const std::vector<double>& entries,
         const std::optional<IndexSet>& adjustable) {
        return prescribed_diagonal(ambient, support, entries, adjustable).projection;
      },
      py::arg("ambient"), py::arg("support"), py::arg("entries"), py::arg("adjustable") = std::nullopt);
  m.def(
      "tight_pair", [](const Subspace& w) { return tight_pair(w).projections; }, py::arg("w"));
  m.def(
      "tight_chain", [](const Subspace& w, Index count) { return tight_chain_general(w, count).projections; },
      py::arg("w"), py::arg("count"));
  m.def(
      "residual_chain",
      [](Index dim, Index count, Index remainder) {
        const auto r = residual_chain(dim, count, remainder);
        py::dict d;
        d["projections"] = r.family.projections;
        d["achieved_diagonal"] = r.achieved_diagonal;
        d["achieved_spectrum"] = r.family.achieved_spectrum;
        d["matches_stated"] = r.matches_stated;
        return d;
      },
      py::arg("dim"), py::arg("count"), py::arg("remainder"));

  m.def(
      "pffs",
      [](const Subspace& w, const Matrix& frame, const Matrix& perturbation) {
        const auto sys = build_pffs(w, frame, perturbation);
        py::dict d;
        d["analysis"] = sys.analysis();
        d["dual"] = sys.dual();
        d["p_consistent"] = sys.p_consistent();
        d["projection"] = pffs_projection(sys);
        d["fusion_operator"] = fusion_operator_matrix(sys);
        return d;
      },
      py::arg("w"), py::arg("frame"), py::arg("perturbation"));
}
