#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seqtype/io.hpp"

namespace py = pybind11;
using namespace seqtype;

namespace {

Vector vec_from_py(const std::vector<std::string>& xs) {
    std::vector<Rational> r;
    r.reserve(xs.size());
    for (const auto& x : xs) r.push_back(Rational::parse(x));
    return Vector(std::move(r));
}

std::vector<std::string> vec_to_py(const Vector& v) {
    std::vector<std::string> out;
    out.reserve(v.dim());
    for (int i = 0; i < v.dim(); ++i) out.push_back(v[i].str());
    return out;
}

std::vector<Vector> vecs_from_py(const std::vector<std::vector<std::string>>& xs) {
    std::vector<Vector> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(vec_from_py(x));
    return out;
}

OrientedLine line_from_py(const std::pair<std::vector<std::string>, std::vector<std::string>>& av) {
    OrientedLine l;
    l.a = vec_from_py(av.first);
    l.v = vec_from_py(av.second);
    l.d = l.a.dim();
    return l;
}

std::vector<OrientedLine>
lines_from_py(const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& ls) {
    std::vector<OrientedLine> out;
    out.reserve(ls.size());
    for (const auto& l : ls) out.push_back(line_from_py(l));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact universality types for sequences of points, lines and flats";

    py::register_exception<general_position_error>(m, "GeneralPositionError");
    py::register_exception<guardrail_error>(m, "GuardrailError");
    py::register_exception<verification_error>(m, "VerificationError");

    m.def("rational_str", [](const std::string& s) { return Rational::parse(s).str(); },
          "normalize a rational literal to canonical p/q form");

    m.def("det", [](const std::vector<std::vector<std::string>>& rows) {
        std::vector<Vector> rv = vecs_from_py(rows);
        return det(Matrix::from_rows(rv)).str();
    });

    m.def("orientation_sign", [](const std::vector<std::vector<std::string>>& pts) {
        return orientation_sign(vecs_from_py(pts));
    });

    m.def("homogeneous_sign", [](int d, const std::vector<std::vector<std::string>>& pts)
              -> std::optional<int> {
        PointSequence seq{d, vecs_from_py(pts)};
        return homogeneous_sign(seq);
    });

    m.def("radon_partition", [](const std::vector<std::vector<std::string>>& pts) {
        RadonPartition p = radon_partition(vecs_from_py(pts));
        return py::make_tuple(std::vector<int>(p.X.begin(), p.X.end()),
                              std::vector<int>(p.Y.begin(), p.Y.end()),
                              is_interlacing(p));
    });

    m.def("moment", [](const std::string& t, int d) { return vec_to_py(moment(Rational::parse(t), d)); });
    m.def("moment_star",
          [](const std::string& t, int d) { return vec_to_py(moment_star(Rational::parse(t), d)); });

    m.def("tuple_type",
          [](const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& ls) {
              return tuple_type(lines_from_py(ls));
          });

    m.def("sequence_type",
          [](int d, const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& ls)
              -> std::optional<Perm> { return sequence_type(lines_from_py(ls), d); });

    m.def("unoriented_tuple_type",
          [](const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& ls) {
              UnorientedTypeProfile p = unoriented_tuple_type(lines_from_py(ls));
              return p.pairs;
          });

    m.def("flats_tuple_type",
          [](const std::vector<std::pair<std::vector<std::string>,
                                         std::vector<std::vector<std::string>>>>& fs) {
              std::vector<Flat> flats;
              for (const auto& [a, basis] : fs) {
                  Flat f;
                  f.a = vec_from_py(a);
                  f.d = f.a.dim();
                  f.basis = vecs_from_py(basis);
                  f.k = static_cast<int>(f.basis.size());
                  flats.push_back(std::move(f));
              }
              return flats_tuple_type(flats);
          });

    m.def("vandermonde", [](const std::vector<std::string>& ts) {
        std::vector<Rational> r;
        for (const auto& t : ts) r.push_back(Rational::parse(t));
        return vandermonde(r).str();
    });
    m.def("secondary_vandermonde", [](const std::vector<std::string>& ts, int j) {
        std::vector<Rational> r;
        for (const auto& t : ts) r.push_back(Rational::parse(t));
        return secondary_vandermonde(r, j).str();
    });
    m.def("elem_symmetric", [](const std::vector<std::string>& ts, int j) {
        std::vector<Rational> r;
        for (const auto& t : ts) r.push_back(Rational::parse(t));
        return elem_symmetric(r, j).str();
    });
    m.def("det_A", [](const std::vector<std::string>& a, const std::vector<std::string>& ts) {
        std::vector<Rational> ra, rts;
        for (const auto& x : a) ra.push_back(Rational::parse(x));
        for (const auto& t : ts) rts.push_back(Rational::parse(t));
        return det_A(ra, rts).str();
    });

    m.def("hyperboloid_line", [](const std::string& s) {
        OrientedLine l = family_line(hyperboloid_family(), Rational::parse(s));
        return py::make_tuple(vec_to_py(l.a), vec_to_py(l.v));
    });

    m.def("stacked_permutation", [](const std::string& spec) {
        return stacked_permutation(stacked_spec_parse(spec));
    });
    m.def("is_two_sided_stacked", [](const Perm& p) { return is_two_sided_stacked(p); });
    m.def("enumerate_stacked", [](int d) { return enumerate_stacked(d); });

    m.def("build_ri_json", [](int D, int mm, const std::string& eps, std::int64_t max_bits) {
        BuildOptions opts;
        opts.max_entry_bits = max_bits;
        return ri_matrix_to_json(build_exact(D, mm, Rational::parse(eps), opts));
    }, py::arg("D"), py::arg("m"), py::arg("epsilon"), py::arg("max_entry_bits") = 10'000'000);

    m.def("verify_ri_json", [](const std::string& matrix_json, const std::string& eps) {
        RIMatrix M = ri_matrix_from_json(matrix_json);
        Rational e = eps.empty() ? M.epsilon : Rational::parse(eps);
        return verify_report_to_json(verify_ri(M, e));
    }, py::arg("matrix_json"), py::arg("epsilon") = std::string());

    m.def("construct_json", [](int d, int n, const std::string& spec, const std::string& mode,
                               int margin) {
        ConstructOptions opts;
        opts.mode = construct_mode_parse(mode);
        opts.margin = margin;
        UniversalLineSequence seq = build_universal_lines(d, n, stacked_spec_parse(spec), opts);
        py::dict out;
        out["lines"] = line_sequence_to_json(seq.lines, seq.d, true);
        out["manifest"] = construct_manifest_to_json(seq);
        return out;
    }, py::arg("d"), py::arg("n"), py::arg("spec"), py::arg("mode") = "tuned", py::arg("margin") = 8);

    m.def("classify_lines_json", [](const std::string& lines_json) -> std::optional<Perm> {
        LineFile f = line_sequence_from_json(lines_json);
        return sequence_type(f.lines, f.d);
    });

    m.def("census_json", [](const std::string& object_class, int d, int k, int N, int n,
                            int trials, std::uint64_t seed, long bound, int jobs) {
        CensusParams p;
        p.object_class = object_class_parse(object_class);
        p.d = d;
        p.k = k;
        p.N = N;
        p.n = n;
        p.trials = trials;
        p.seed = seed;
        p.bound = bound;
        p.jobs = jobs;
        return census_to_json(census(p));
    }, py::arg("object_class"), py::arg("d"), py::arg("k"), py::arg("N"), py::arg("n"),
       py::arg("trials"), py::arg("seed") = 1, py::arg("bound") = 10, py::arg("jobs") = 1);
}
