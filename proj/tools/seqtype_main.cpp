#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "seqtype/combinatorics.hpp"
#include "seqtype/io.hpp"

using namespace seqtype;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGeneralPosition = 2;
constexpr int kExitVerification = 3;
constexpr int kExitGuardrail = 4;

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            out.push_back(Rational::parse(cur));
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(Rational::parse(cur));
    return out;
}

int cmd_classify(const std::string& points_path, const std::string& lines_path,
                 const std::string& flats_path) {
    int given = !points_path.empty() + !lines_path.empty() + !flats_path.empty();
    if (given != 1) throw CLI::ValidationError("classify needs exactly one input file");
    if (!points_path.empty()) {
        PointSequence seq = point_sequence_from_json(read_file(points_path));
        // exact enumeration only: refuse workloads past 10^6 tuples
        if (binomial_capped(static_cast<int>(seq.points.size()), seq.d + 1,
                            2'000'000) > 1'000'000)
            throw invalid_argument_error(
                "more than 10^6 tuples to enumerate; refusing (no sampling mode)");
        auto sign = homogeneous_sign(seq);
        if (!sign) {
            std::cout << "type: none (not homogeneous)\n";
            return kExitVerification;
        }
        std::cout << "type: " << (*sign > 0 ? "+1" : "-1") << "\n";
        return kExitOk;
    }
    if (!lines_path.empty()) {
        LineFile f = line_sequence_from_json(read_file(lines_path));
        if (f.oriented) {
            auto sigma = sequence_type(f.lines, f.d);
            if (!sigma) {
                std::cout << "type: none (not homogeneous)\n";
                return kExitVerification;
            }
            std::cout << "type: " << perm_str(*sigma) << "\n";
            return kExitOk;
        }
        auto profile = unoriented_sequence_profile(f.lines, f.d);
        auto pair = profile ? reduce_profile(*profile) : std::nullopt;
        if (!pair) {
            std::cout << "type: none (not homogeneous)\n";
            return kExitVerification;
        }
        std::cout << "type: {" << perm_str(*pair) << "} (unoriented pair)\n";
        return kExitOk;
    }
    FlatFile f = flat_sequence_from_json(read_file(flats_path));
    int r = (f.d - 1) / f.k;
    auto pi = flats_sequence_type(f.flats, r);
    if (!pi) {
        std::cout << "type: none (not homogeneous)\n";
        return kExitVerification;
    }
    std::cout << "type: " << perm_str(*pi) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact universality types for sequences of points, lines and flats"};
    app.require_subcommand(1);

    // classify
    std::string cls_points, cls_lines, cls_flats;
    auto* classify = app.add_subcommand("classify", "type of a homogeneous sequence");
    classify->add_option("--points", cls_points, "point-sequence JSON file");
    classify->add_option("--lines", cls_lines, "line-sequence JSON file");
    classify->add_option("--flats", cls_flats, "flat-sequence JSON file");

    // radon
    std::string radon_points, radon_out;
    auto* radon = app.add_subcommand("radon", "Radon partition of d+2 points");
    radon->add_option("--points", radon_points, "point-sequence JSON file")->required();
    radon->add_option("-o,--output", radon_out, "write the partition as JSON");

    // build-ri
    int ri_D = 0, ri_m = 0, ri_s = 1, ri_t = 0;
    std::string ri_eps = "1/512", ri_mode = "exact", ri_out;
    std::int64_t ri_bits = 10'000'000;
    auto* build_ri = app.add_subcommand("build-ri", "build a rapidly-increasing matrix");
    build_ri->add_option("-D,--rows", ri_D, "row count")->required();
    build_ri->add_option("-m,--cols", ri_m, "column count")->required();
    build_ri->add_option("--epsilon", ri_eps, "tolerance, e.g. 1/512");
    build_ri->add_option("--mode", ri_mode, "exact | geometric");
    build_ri->add_option("--s", ri_s, "geometric scale");
    build_ri->add_option("--t", ri_t, "geometric row ratio (needs t > m)");
    build_ri->add_option("--max-entry-bits", ri_bits, "guardrail budget");
    build_ri->add_option("-o,--output", ri_out, "output JSON path")->required();

    // verify-ri
    std::string vri_matrix, vri_eps, vri_out;
    std::uint64_t vri_cap = 20'000, vri_seed = 1;
    auto* verify_ri_cmd = app.add_subcommand("verify-ri", "check RI conditions on a matrix");
    verify_ri_cmd->add_option("--matrix", vri_matrix, "matrix JSON file")->required();
    verify_ri_cmd->add_option("--epsilon", vri_eps, "tolerance override");
    verify_ri_cmd->add_option("--cap", vri_cap, "exhaustive submatrix cap");
    verify_ri_cmd->add_option("--seed", vri_seed, "sampling seed");
    verify_ri_cmd->add_option("-o,--output", vri_out, "write the report as JSON");

    // construct
    int con_d = 0, con_n = 0, con_margin = 8;
    std::string con_spec, con_mode = "tuned", con_out, con_manifest;
    std::int64_t con_bits = 10'000'000;
    auto* construct = app.add_subcommand("construct", "build a verified universal line sequence");
    construct->add_option("-d,--dim", con_d, "ambient dimension")->required();
    construct->add_option("-n,--count", con_n, "number of lines")->required();
    construct->add_option("--spec", con_spec, "stacked spec, e.g. asc:RL or desc:LR")->required();
    construct->add_option("--mode", con_mode, "tuned | exact-ri");
    construct->add_option("--margin", con_margin, "tuned exponent margin");
    construct->add_option("--max-entry-bits", con_bits, "exact-ri guardrail budget");
    construct->add_option("-o,--output", con_out, "line-sequence JSON path")->required();
    construct->add_option("--manifest", con_manifest, "manifest path (default: <output>.manifest.json)");

    // verify-sequence
    std::string vs_lines, vs_expect;
    auto* verify_seq = app.add_subcommand("verify-sequence", "check a sequence against an expected type");
    verify_seq->add_option("--lines", vs_lines, "line-sequence JSON file")->required();
    verify_seq->add_option("--expect", vs_expect, "expected type, e.g. \"1 2\"")->required();

    // vandermonde
    std::string vdm_ts, vdm_a;
    int vdm_j = -1;
    auto* vdm = app.add_subcommand("vandermonde", "principal/secondary Vandermondians");
    vdm->add_option("--ts", vdm_ts, "increasing positive rationals, comma separated")->required();
    vdm->add_option("--j", vdm_j, "secondary index");
    vdm->add_option("--a", vdm_a, "positive coefficients for the alternating-column determinant");

    // family
    std::string fam_kind = "hyperboloid", fam_spec_path, fam_ts, fam_coeffs, fam_out;
    int fam_d = 3;
    bool fam_canonical = false;
    auto* family = app.add_subcommand("family", "sample a continuous family of lines");
    family->add_option("--kind", fam_kind, "generic | hyperboloid | moment-direction");
    family->add_option("--spec-file", fam_spec_path, "family spec JSON file");
    family->add_option("-d,--dim", fam_d, "dimension (generic / moment-direction)");
    family->add_option("--coeffs", fam_coeffs,
                       "generic coefficients: semicolon-separated comma lists, lowest degree first");
    family->add_option("--ts", fam_ts, "increasing sample parameters")->required();
    family->add_flag("--canonical", fam_canonical, "canonicalize emitted representatives");
    family->add_option("-o,--output", fam_out, "write sampled lines as JSON");

    // census
    std::string cen_class = "oriented-lines", cen_out;
    CensusParams cen;
    auto* census_cmd = app.add_subcommand("census", "random homogeneous-subsequence census");
    census_cmd->add_option("--class", cen_class, "points | oriented-lines | unoriented-lines | flats");
    census_cmd->add_option("-d,--dim", cen.d, "dimension")->required();
    census_cmd->add_option("-k", cen.k, "flat dimension (flats only)");
    census_cmd->add_option("-N", cen.N, "objects per trial")->required();
    census_cmd->add_option("-n", cen.n, "homogeneous subsequence length")->required();
    census_cmd->add_option("--trials", cen.trials, "trial count")->required();
    census_cmd->add_option("--seed", cen.seed, "PRNG seed");
    census_cmd->add_option("--bound", cen.bound, "coordinate bound");
    census_cmd->add_option("--jobs", cen.jobs, "worker threads");
    census_cmd->add_option("-o,--output", cen_out, "census JSON path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(classify))
            return cmd_classify(cls_points, cls_lines, cls_flats);

        if (app.got_subcommand(radon)) {
            PointSequence seq = point_sequence_from_json(read_file(radon_points));
            RadonPartition p = radon_partition(seq.points);
            bool inter = is_interlacing(p);
            std::cout << "X:";
            for (int i : p.X) std::cout << " " << i;
            std::cout << "\nY:";
            for (int i : p.Y) std::cout << " " << i;
            std::cout << "\ninterlacing: " << (inter ? "true" : "false") << "\n";
            if (!radon_out.empty()) write_file(radon_out, radon_to_json(p, inter));
            return kExitOk;
        }

        if (app.got_subcommand(build_ri)) {
            RIMatrix M;
            if (ri_mode == "exact") {
                BuildOptions opts;
                opts.max_entry_bits = ri_bits;
                M = build_exact(ri_D, ri_m, Rational::parse(ri_eps), opts);
            } else if (ri_mode == "geometric") {
                if (ri_t == 0) throw CLI::ValidationError("geometric mode needs --t");
                M = build_geometric(ri_D, ri_m, ri_s, ri_t, ri_bits);
            } else {
                throw CLI::ValidationError("--mode must be exact or geometric");
            }
            write_file(ri_out, ri_matrix_to_json(M));
            std::cout << "wrote " << ri_out << " (" << M.D << "x" << M.m << ", mode "
                      << ri_mode_str(M.mode) << ")\n";
            return kExitOk;
        }

        if (app.got_subcommand(verify_ri_cmd)) {
            RIMatrix M = ri_matrix_from_json(read_file(vri_matrix));
            Rational eps = vri_eps.empty() ? M.epsilon : Rational::parse(vri_eps);
            VerifyOptions opts;
            opts.submatrix_cap = vri_cap;
            opts.seed = vri_seed;
            RiVerifyReport rep = verify_ri(M, eps, opts);
            std::cout << "monotonic: " << (rep.monotonic.pass ? "pass" : "FAIL " + rep.monotonic.witness)
                      << "\nri (" << rep.ri_sampling << ", " << rep.submatrices_checked
                      << " submatrices): " << (rep.ri.pass ? "pass" : "FAIL " + rep.ri.witness)
                      << "\nrow-triple: " << (rep.row_triple.pass ? "pass" : "FAIL " + rep.row_triple.witness)
                      << "\n";
            if (!vri_out.empty()) write_file(vri_out, verify_report_to_json(rep));
            return rep.all_pass() ? kExitOk : kExitVerification;
        }

        if (app.got_subcommand(construct)) {
            ConstructOptions opts;
            opts.mode = construct_mode_parse(con_mode);
            opts.max_entry_bits = con_bits;
            opts.margin = con_margin;
            StackedSpec spec = stacked_spec_parse(con_spec);
            UniversalLineSequence seq = build_universal_lines(con_d, con_n, spec, opts);
            write_file(con_out, line_sequence_to_json(seq.lines, seq.d, true));
            std::string manifest = con_manifest.empty() ? con_out + ".manifest.json" : con_manifest;
            write_file(manifest, construct_manifest_to_json(seq));
            std::cout << "verified type: " << perm_str(seq.type) << "\nwrote " << con_out
                      << " and " << manifest << "\n";
            return kExitOk;
        }

        if (app.got_subcommand(verify_seq)) {
            LineFile f = line_sequence_from_json(read_file(vs_lines));
            Perm expect = perm_parse(vs_expect);
            auto sigma = sequence_type(f.lines, f.d);
            if (!sigma || *sigma != expect) {
                std::cerr << "verification failed: sequence type is "
                          << (sigma ? perm_str(*sigma) : std::string("not homogeneous"))
                          << ", expected " << perm_str(expect) << "\n";
                return kExitVerification;
            }
            std::cout << "verified: type " << perm_str(expect) << " over all tuples\n";
            return kExitOk;
        }

        if (app.got_subcommand(vdm)) {
            std::vector<Rational> ts = parse_rational_list(vdm_ts);
            Rational v0 = vandermonde(ts);
            std::cout << "V_0 = " << v0.str() << "\n";
            if (vdm_j >= 0) {
                Rational vj = secondary_vandermonde(ts, vdm_j);
                Rational ej = elem_symmetric(ts, vdm_j);
                std::cout << "V_" << vdm_j << " = " << vj.str() << "\nE_" << vdm_j << " = "
                          << ej.str() << "\nV_j == E_j*V_0: "
                          << ((vj == ej * v0) ? "true" : "false") << "\n";
            }
            if (!vdm_a.empty()) {
                std::vector<Rational> a = parse_rational_list(vdm_a);
                Rational dA = det_A(a, ts);
                Rational sum;
                for (size_t i = 0; i < a.size(); ++i) {
                    int j = static_cast<int>(a.size()) - 1 - static_cast<int>(i);
                    Rational vj = (j == 0) ? vandermonde(ts) : secondary_vandermonde(ts, j);
                    sum += a[i] * vj;
                }
                std::cout << "det_A = " << dA.str() << "\nsum a_i V_{d-i} = " << sum.str()
                          << "\nequal: " << ((dA == sum) ? "true" : "false") << "\n";
            }
            return kExitOk;
        }

        if (app.got_subcommand(family)) {
            FamilySpec spec;
            if (!fam_spec_path.empty()) {
                spec = family_spec_from_json(read_file(fam_spec_path));
            } else if (fam_kind == "hyperboloid") {
                spec = hyperboloid_family();
            } else if (fam_kind == "moment-direction") {
                spec = moment_direction_family(fam_d);
            } else if (fam_kind == "generic") {
                spec.d = fam_d;
                spec.kind = FamilyKind::Generic;
                spec.domain_lo = Rational(0);
                spec.domain_hi = Rational(1000000000L);
                std::string cur;
                for (char c : fam_coeffs + ";") {
                    if (c == ';') {
                        if (!cur.empty()) {
                            Polynomial poly;
                            poly.coeffs = parse_rational_list(cur);
                            spec.coeffs.push_back(poly);
                            cur.clear();
                        }
                    } else cur += c;
                }
                if (static_cast<int>(spec.coeffs.size()) != fam_d)
                    throw CLI::ValidationError("--coeffs needs d semicolon-separated polynomials");
            } else {
                throw CLI::ValidationError("--kind must be generic, hyperboloid or moment-direction");
            }
            std::vector<Rational> ts = parse_rational_list(fam_ts);
            FamilyTypeCheck check = family_type_check(spec, ts);
            std::cout << "type: " << (check.type ? perm_str(*check.type) : std::string("none"))
                      << "\n";
            if (!check.coeffs_ok)
                std::cout << "coefficient check (sampled): violated - " << check.note << "\n";
            if (!fam_out.empty()) {
                std::vector<OrientedLine> lines;
                for (const auto& t : ts) {
                    OrientedLine l = family_line(spec, t);
                    lines.push_back(fam_canonical ? canonicalize_line(l) : l);
                }
                write_file(fam_out, line_sequence_to_json(lines, spec.d, true));
            }
            return check.type ? kExitOk : kExitVerification;
        }

        if (app.got_subcommand(census_cmd)) {
            cen.object_class = object_class_parse(cen_class);
            Census c = census(cen);
            std::cout << "census: " << c.object_class << " d=" << c.d << " N=" << c.N
                      << " n=" << c.n << " trials=" << c.trials << " seed=" << c.seed << "\n";
            for (const auto& [type, count] : c.histogram)
                std::cout << "  " << type << " : " << count << "\n";
            std::cout << "failures: " << c.failures << "  found: " << c.found << "\n";
            if (c.d == 5 && cen.object_class == ObjectClass::OrientedLines)
                std::cout << "watchlist hits: " << c.watchlist_hits << "\n";
            if (!cen_out.empty()) write_file(cen_out, census_to_json(c));
            return kExitOk;
        }
    } catch (const general_position_error& e) {
        std::cerr << "general position violation: " << e.what() << "\n";
        return kExitGeneralPosition;
    } catch (const guardrail_error& e) {
        std::cerr << "guardrail refusal: " << e.what() << "\n";
        return kExitGuardrail;
    } catch (const verification_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
