#include "seqtype/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace seqtype {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json vec_to_json(const Vector& v) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i < v.dim(); ++i) arr.push_back(v[i].str());
    return arr;
}

Vector vec_from_json(const ordered_json& arr) {
    std::vector<Rational> xs;
    for (const auto& x : arr) xs.push_back(Rational::parse(x.get<std::string>()));
    return Vector(std::move(xs));
}

ordered_json parse(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw io_error("malformed JSON input");
    return j;
}

constexpr std::size_t kCompactBits = 10'000;

ordered_json bigint_to_json(const BigInt& z) {
    std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
    if (bits > kCompactBits && mpz_sgn(z.get_mpz_t()) > 0) {
        // z = 2^e + r with e the top bit; compact only when r is small
        unsigned long e = static_cast<unsigned long>(bits - 1);
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
        BigInt r = z - p;
        if (mpz_sizeinbase(r.get_mpz_t(), 2) <= 64) {
            ordered_json o;
            o["pow2"] = e;
            o["plus"] = r.get_str();
            return o;
        }
    }
    return z.get_str();
}

BigInt bigint_from_json(const ordered_json& j) {
    if (j.is_string()) return bigint_parse(j.get<std::string>());
    if (j.is_object()) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, j.at("pow2").get<unsigned long>());
        return p + bigint_parse(j.at("plus").get<std::string>());
    }
    throw io_error("matrix entry must be a decimal string or {pow2, plus}");
}

} // namespace

std::string point_sequence_to_json(const PointSequence& seq) {
    ordered_json j;
    j["d"] = seq.d;
    ordered_json pts = ordered_json::array();
    for (const auto& p : seq.points) pts.push_back(vec_to_json(p));
    j["points"] = pts;
    return j.dump();
}

PointSequence point_sequence_from_json(const std::string& text) {
    ordered_json j = parse(text);
    PointSequence seq;
    seq.d = j.at("d").get<int>();
    for (const auto& p : j.at("points")) {
        Vector v = vec_from_json(p);
        if (v.dim() != seq.d) throw io_error("point dimension mismatch");
        seq.points.push_back(std::move(v));
    }
    return seq;
}

std::string line_sequence_to_json(const std::vector<OrientedLine>& lines, int d,
                                  bool oriented) {
    ordered_json j;
    j["d"] = d;
    j["oriented"] = oriented;
    ordered_json arr = ordered_json::array();
    for (const auto& l : lines) {
        ordered_json o;
        o["a"] = vec_to_json(l.a);
        o["v"] = vec_to_json(l.v);
        arr.push_back(o);
    }
    j["lines"] = arr;
    return j.dump();
}

LineFile line_sequence_from_json(const std::string& text) {
    ordered_json j = parse(text);
    LineFile f;
    f.d = j.at("d").get<int>();
    f.oriented = j.value("oriented", true);
    for (const auto& o : j.at("lines")) {
        OrientedLine l;
        l.d = f.d;
        l.a = vec_from_json(o.at("a"));
        l.v = vec_from_json(o.at("v"));
        if (l.a.dim() != f.d || l.v.dim() != f.d)
            throw io_error("line coordinate dimension mismatch");
        f.lines.push_back(std::move(l));
    }
    return f;
}

std::string flat_sequence_to_json(const std::vector<Flat>& flats, int d, int k) {
    ordered_json j;
    j["d"] = d;
    j["k"] = k;
    ordered_json arr = ordered_json::array();
    for (const auto& f : flats) {
        ordered_json o;
        o["a"] = vec_to_json(f.a);
        ordered_json basis = ordered_json::array();
        for (const auto& b : f.basis) basis.push_back(vec_to_json(b));
        o["B"] = basis;
        arr.push_back(o);
    }
    j["flats"] = arr;
    return j.dump();
}

FlatFile flat_sequence_from_json(const std::string& text) {
    ordered_json j = parse(text);
    FlatFile ff;
    ff.d = j.at("d").get<int>();
    ff.k = j.at("k").get<int>();
    for (const auto& o : j.at("flats")) {
        Flat f;
        f.d = ff.d;
        f.k = ff.k;
        f.a = vec_from_json(o.at("a"));
        for (const auto& b : o.at("B")) f.basis.push_back(vec_from_json(b));
        if (f.a.dim() != ff.d || static_cast<int>(f.basis.size()) != ff.k)
            throw io_error("flat shape mismatch");
        ff.flats.push_back(std::move(f));
    }
    return ff;
}

std::string ri_matrix_to_json(const RIMatrix& M) {
    ordered_json j;
    j["D"] = M.D;
    j["m"] = M.m;
    j["epsilon"] = M.epsilon.str();
    j["mode"] = ri_mode_str(M.mode);
    ordered_json rows = ordered_json::array();
    for (const auto& row : M.a) {
        ordered_json r = ordered_json::array();
        for (const auto& e : row) r.push_back(bigint_to_json(e));
        rows.push_back(r);
    }
    j["entries"] = rows;
    return j.dump();
}

RIMatrix ri_matrix_from_json(const std::string& text) {
    ordered_json j = parse(text);
    RIMatrix M;
    M.D = j.at("D").get<int>();
    M.m = j.at("m").get<int>();
    M.epsilon = Rational::parse(j.at("epsilon").get<std::string>());
    M.mode = ri_mode_parse(j.at("mode").get<std::string>());
    M.eta = M.epsilon / Rational(factorial(M.D));
    for (const auto& row : j.at("entries")) {
        std::vector<BigInt> r;
        for (const auto& e : row) r.push_back(bigint_from_json(e));
        if (static_cast<int>(r.size()) != M.m) throw io_error("matrix row length mismatch");
        M.a.push_back(std::move(r));
    }
    if (static_cast<int>(M.a.size()) != M.D) throw io_error("matrix row count mismatch");
    return M;
}

std::string census_to_json(const Census& c) {
    ordered_json j;
    j["class"] = c.object_class;
    j["d"] = c.d;
    j["k"] = c.k;
    j["N"] = c.N;
    j["n"] = c.n;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["bound"] = c.bound;
    ordered_json hist;
    for (const auto& [type, count] : c.histogram) hist[type] = count;
    j["histogram"] = hist;
    j["failures"] = c.failures;
    j["found"] = c.found;
    j["watchlist_hits"] = c.watchlist_hits;
    j["watchlist_types"] = c.watchlist_types;
    return j.dump();
}

std::string verify_report_to_json(const RiVerifyReport& rep) {
    ordered_json j;
    auto cond = [](const RiCondition& c) {
        ordered_json o;
        o["pass"] = c.pass;
        if (!c.pass) o["witness"] = c.witness;
        return o;
    };
    j["monotonic"] = cond(rep.monotonic);
    j["ri"] = cond(rep.ri);
    j["row_triple"] = cond(rep.row_triple);
    j["ri_sampling"] = rep.ri_sampling;
    j["submatrices_checked"] = rep.submatrices_checked;
    j["all_pass"] = rep.all_pass();
    return j.dump();
}

std::string construct_manifest_to_json(const UniversalLineSequence& seq) {
    ordered_json j;
    ordered_json spec;
    spec["d"] = seq.d;
    spec["family"] = seq.spec.family == StackedFamily::Ascending ? "ascending" : "descending";
    spec["spec"] = stacked_spec_str(seq.spec);
    j["spec"] = spec;
    j["mode"] = construct_mode_str(seq.mode);
    ordered_json params;
    params["n"] = seq.n;
    params["epsilon"] = seq.matrix.epsilon.str();
    params["matrix_mode"] = ri_mode_str(seq.matrix.mode);
    params["margin"] = seq.margin;
    params["mirrored"] = seq.mirrored;
    ordered_json delta = ordered_json::array();
    for (int dlt : seq.delta) delta.push_back(dlt);
    params["delta"] = delta;
    ordered_json gammas = ordered_json::array();
    for (const auto& g : seq.gammas) gammas.push_back(bigint_to_json(g));
    params["gammas"] = gammas;
    j["parameters"] = params;
    j["type"] = perm_str(seq.type);
    j["verified"] = seq.verified;
    return j.dump();
}

std::string radon_to_json(const RadonPartition& p, bool interlacing) {
    ordered_json j;
    j["n"] = p.n;
    j["X"] = std::vector<int>(p.X.begin(), p.X.end());
    j["Y"] = std::vector<int>(p.Y.begin(), p.Y.end());
    j["interlacing"] = interlacing;
    return j.dump();
}

std::string dominance_report_to_json(const DominanceReport& rep) {
    ordered_json j;
    j["epsilon"] = rep.epsilon.str();
    ordered_json positions = ordered_json::array();
    for (const auto& pos : rep.positions) {
        ordered_json o;
        o["position"] = pos.position;
        o["peak"] = pos.peak;
        ordered_json terms = ordered_json::array();
        for (const auto& t : pos.terms) {
            ordered_json e;
            e["bits"] = mpz_sizeinbase(t.get_mpz_t(), 2);
            if (mpz_sizeinbase(t.get_mpz_t(), 2) <= 4096) e["value"] = t.get_str();
            terms.push_back(e);
        }
        o["terms"] = terms;
        o["strict"] = pos.strict;
        o["within_epsilon"] = pos.within_epsilon;
        positions.push_back(o);
    }
    j["positions"] = positions;
    j["strict_pass"] = rep.strict_pass;
    j["epsilon_pass"] = rep.epsilon_pass;
    return j.dump();
}

std::string family_spec_to_json(const FamilySpec& spec) {
    ordered_json j;
    j["d"] = spec.d;
    switch (spec.kind) {
    case FamilyKind::Generic: j["kind"] = "generic"; break;
    case FamilyKind::Hyperboloid: j["kind"] = "hyperboloid"; break;
    case FamilyKind::MomentDirection: j["kind"] = "moment-direction"; break;
    }
    if (spec.kind == FamilyKind::Generic) {
        ordered_json coeffs = ordered_json::array();
        for (const auto& poly : spec.coeffs) {
            ordered_json c = ordered_json::array();
            for (const auto& x : poly.coeffs) c.push_back(x.str());
            coeffs.push_back(c);
        }
        j["coeffs"] = coeffs;
    }
    j["domain"] = ordered_json::array({spec.domain_lo.str(), spec.domain_hi.str()});
    return j.dump();
}

FamilySpec family_spec_from_json(const std::string& text) {
    ordered_json j = parse(text);
    FamilySpec spec;
    spec.d = j.at("d").get<int>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "generic") spec.kind = FamilyKind::Generic;
    else if (kind == "hyperboloid") spec.kind = FamilyKind::Hyperboloid;
    else if (kind == "moment-direction") spec.kind = FamilyKind::MomentDirection;
    else throw io_error("unknown family kind: '" + kind + "'");
    if (spec.kind == FamilyKind::Generic) {
        for (const auto& c : j.at("coeffs")) {
            Polynomial poly;
            for (const auto& x : c) poly.coeffs.push_back(Rational::parse(x.get<std::string>()));
            spec.coeffs.push_back(std::move(poly));
        }
        if (static_cast<int>(spec.coeffs.size()) != spec.d)
            throw io_error("generic family needs d coefficient polynomials");
    }
    const auto& dom = j.at("domain");
    spec.domain_lo = Rational::parse(dom.at(0).get<std::string>());
    spec.domain_hi = Rational::parse(dom.at(1).get<std::string>());
    return spec;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    out << text << '\n';
}

} // namespace seqtype
