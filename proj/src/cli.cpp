#include "a4link/cli.hpp"

#include "a4link/elliptic.hpp"
#include "a4link/framework.hpp"
#include "a4link/io.hpp"
#include "a4link/linking.hpp"
#include "a4link/spectral.hpp"
#include "a4link/trajectory.hpp"
#include "a4link/unipoly.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace a4link {

namespace {

namespace fs = std::filesystem;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream os(p, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + path);
    os << text;
}

struct XInput {
    bool exact = false;
    BigRational xq;
    double xd = 0;
};

// "p/q" or integer literal -> exact; decimal/scientific -> numeric
std::optional<XInput> parse_x(const std::string& s) {
    XInput in;
    if (s.find('/') != std::string::npos ||
        (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
         s.find('E') == std::string::npos)) {
        auto q = BigRational::parse(s);
        if (!q) return std::nullopt;
        in.exact = true;
        in.xq = *q;
        in.xd = q->to_double();
        return in;
    }
    try {
        size_t pos = 0;
        in.xd = std::stod(s, &pos);
        if (pos != s.size()) return std::nullopt;
    } catch (...) {
        return std::nullopt;
    }
    in.exact = false;
    return in;
}

double as_num(double v) { return v; }
[[maybe_unused]] double as_num(const BigRational& v) { return v.to_double(); }
double as_num(const QuadValue& v) { return v.to_double(); }

template <class T>
double edge_length(const Framework<T>& fw, const typename Framework<T>::Edge& e) {
    Vec3<double> a{as_num(fw.nodes[static_cast<size_t>(e.i)].x), as_num(fw.nodes[static_cast<size_t>(e.i)].y),
                   as_num(fw.nodes[static_cast<size_t>(e.i)].z)};
    Vec3<double> b{as_num(fw.nodes[static_cast<size_t>(e.j)].x), as_num(fw.nodes[static_cast<size_t>(e.j)].y),
                   as_num(fw.nodes[static_cast<size_t>(e.j)].z)};
    return norm(a - b);
}

Json linking_matrix_json(const LinkingMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) out.push_back({row[0], row[1], row[2], row[3]});
    return out;
}

template <class T>
Json first_length_by_kind(const Framework<T>& fw) {
    Json out;
    for (EdgeKind kind : {EdgeKind::strut, EdgeKind::cable_c1, EdgeKind::cable_c2}) {
        for (const auto& e : fw.edges) {
            if (e.kind == kind) {
                out[edge_kind_name(kind)] = edge_length(fw, e);
                break;
            }
        }
    }
    return out;
}

int cmd_analyze(const XInput& x, const std::string& out_path, double margin) {
    if (!(x.xd > 0 && x.xd < 1)) {
        std::cerr << "analyze: --x must lie strictly inside (0,1)\n";
        return 2;
    }
    Json report;
    if (x.exact) {
        QuadValue y = branch_y_exact(x.xq, Branch::stable);
        Framework<QuadValue> fw = realize_at(x.xq, y);
        report["mode"] = "exact";
        report["x"] = x.xq.str();
        report["y"] = y.str();
        report["equilibrium_exact"] = equilibrium_exact(fw);
        Json nodes = Json::array();
        for (const auto& p : fw.nodes) nodes.push_back({as_num(p.x), as_num(p.y), as_num(p.z)});
        report["nodes"] = std::move(nodes);
        report["edge_lengths"] = first_length_by_kind(fw);
        auto pars = intersection_params_at(x.xq, y);
        report["tau"] = pars.tau.str();
        report["r1"] = pars.r1.str();
        report["r2"] = pars.r2.str();
        report["classification"] = crossing_class_name(pars.cls);
        report["linking_matrix"] = linking_matrix_json(linking_matrix(fw));
    } else {
        double y = branch_y_numeric(x.xd, Branch::stable);
        Framework<double> fw = realize_at(x.xd, y);
        report["mode"] = "numeric";
        report["x"] = x.xd;
        report["y"] = y;
        report["equilibrium_residual"] = equilibrium_residual(fw);
        Json nodes = Json::array();
        for (const auto& p : fw.nodes) nodes.push_back({p.x, p.y, p.z});
        report["nodes"] = std::move(nodes);
        report["edge_lengths"] = first_length_by_kind(fw);
        auto pars = intersection_params_at(x.xd, y);
        report["tau"] = pars.tau;
        report["r1"] = pars.r1;
        report["r2"] = pars.r2;
        report["classification"] = crossing_class_name(pars.cls);
        LinkingOptions opt;
        opt.margin = margin;
        report["linking_matrix"] = linking_matrix_json(linking_matrix(fw, opt));
    }
    write_text(out_path, report.dump(2) + "\n");
    return 0;
}

int cmd_sweep(double from, double to, int steps, const std::string& out_dir,
              const std::string& format, double margin) {
    if (!(from >= 0 && from < to && to <= 1) || steps < 1) {
        std::cerr << "sweep: need 0 <= from < to <= 1 and steps >= 1\n";
        return 2;
    }
    fs::create_directories(out_dir);
    std::ostringstream csv;
    csv << "x,y,strut_len,cable_c1_len,cable_c2_len,tau,r1,r2,linking\n";
    for (int i = 0; i < steps; ++i) {
        double x = steps == 1 ? from : from + (to - from) * i / (steps - 1);
        double y = branch_y_numeric(x, Branch::stable);
        Framework<double> fw = realize_at(x, y);
        char name[32];
        std::snprintf(name, sizeof name, "frame_%03d.%s", i, format == "obj" ? "obj" : "json");
        write_text((fs::path(out_dir) / name).string(),
                   format == "obj" ? export_obj(fw) : export_json(fw));
        std::string linking = "ok";
        double tau = 0, r1 = 0, r2 = 0;
        try {
            auto pars = intersection_params_at(x, y);
            tau = pars.tau;
            r1 = pars.r1;
            r2 = pars.r2;
            LinkingOptions opt;
            opt.margin = margin;
            LinkingMatrix m = linking_matrix(fw, opt);
            for (int a = 0; a < 4 && linking == "ok"; ++a)
                for (int b = 0; b < 4; ++b)
                    if (a != b && std::abs(m[static_cast<size_t>(a)][static_cast<size_t>(b)]) != 1) {
                        linking = "not-hopf";
                        break;
                    }
        } catch (const DegenerateConfiguration&) {
            linking = "degenerate";
        } catch (const PoleError&) {
            linking = "pole";
        }
        Json lens = first_length_by_kind(fw);
        csv << fmt17(x) << "," << fmt17(y) << "," << fmt17(lens["strut"].get<double>()) << ","
            << fmt17(lens["cable_c1"].get<double>()) << "," << fmt17(lens["cable_c2"].get<double>())
            << "," << fmt17(tau) << "," << fmt17(r1) << "," << fmt17(r2) << "," << linking << "\n";
    }
    write_text((fs::path(out_dir) / "sweep.csv").string(), csv.str());
    return 0;
}

int cmd_verify(const std::string& out_path) {
    Json report;
    bool ok = true;
    auto run_check = [&](const char* key, auto&& fn) {
        try {
            fn();
            report[key] = "pass";
        } catch (const std::exception& e) {
            report[key] = std::string("fail: ") + e.what();
            ok = false;
        }
    };

    run_check("det_identity", [] { derive_spectral_cubic(); });
    run_check("stress_matrix_display", [] { stress_matrix(); });
    run_check("p0_kernel_divisibility", [] {
        auto omega = stress_matrix();
        auto p0 = p0_polynomial();
        const MPoly& d8 = SpectralCurve::instance().d8;
        for (size_t i = 0; i < 3; ++i) {
            MPoly comp = omega[i][0] * p0[0] + omega[i][1] * p0[1] + omega[i][2] * p0[2];
            if (!divides(d8, comp))
                throw VerificationError("component " + std::to_string(i) + " of Omega*p0 not in (d)");
        }
    });
    run_check("rational_points", [] { rational_points(); });
    run_check("formula_equivalence", [] { IntersectionFormulas::instance(); });

    try {
        CertificateReport cert = persistence_certificate();
        report["resultant_factorizations"] =
            std::all_of(cert.functions.begin(), cert.functions.end(),
                        [](const FunctionRecord& f) {
                            return !f.paper_factorization_matches.has_value() ||
                                   *f.paper_factorization_matches;
                        })
                ? "pass"
                : "fail";
        report["persistence"] = cert.to_json();
        if (!cert.verdict) ok = false;
        RemarkReport remark = remark_check(cert);
        report["remark_root_pattern"] = remark.to_json();
        if (!remark.pattern_holds) ok = false;
    } catch (const std::exception& e) {
        report["persistence"] = std::string("fail: ") + e.what();
        ok = false;
    }

    run_check("birational_identity", [] { verify_birational_identity(); });
    try {
        TorsionGroup tg = torsion_subgroup();
        report["distinguished_image"] = {tg.distinguished.U.str(), tg.distinguished.V.str()};
        report["torsion_structure"] = {tg.structure.first, tg.structure.second};
        report["torsion_points"] = static_cast<int>(tg.elements.size());
    } catch (const std::exception& e) {
        report["torsion_structure"] = std::string("fail: ") + e.what();
        ok = false;
    }
    run_check("model_isomorphism", [] {
        auto inv = model_invariants_check();
        if (!inv.isomorphic) throw VerificationError("no scale factor");
    });
    run_check("trajectory_identity", [] { verify_G_identity_on_curve(); });
    run_check("singular_points", [] {
        if (!singular_point_check(BigRational(0), BigRational(0)))
            throw VerificationError("(0,0) not singular");
        if (!singular_point_check(BigRational(2, 3), BigRational(2, 3)))
            throw VerificationError("(2/3,2/3) not singular");
        if (singular_point_check(BigRational(1, 6), BigRational(1, 6)))
            throw VerificationError("(1/6,1/6) unexpectedly singular");
    });

    report["overall"] = ok;
    write_text(out_path, report.dump(2) + "\n");
    return ok ? 0 : 1;
}

int cmd_persistence(const std::string& out_path) {
    CertificateReport cert = persistence_certificate();
    Json j = cert.to_json();
    j["remark"] = remark_check(cert).to_json();
    write_text(out_path, j.dump(2) + "\n");
    return cert.verdict ? 0 : 1;
}

int cmd_torsion(const std::string& out_path) {
    TorsionGroup tg = torsion_subgroup();
    Json j = tg.to_json();
    j["model_invariants"] = model_invariants_check().to_json();
    write_text(out_path, j.dump(2) + "\n");
    return 0;
}

int cmd_trajectory(int steps, const std::string& out_path) {
    auto samples = trajectory_samples(steps);
    write_text(out_path, trajectory_csv(samples));
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("a4link");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"A4-symmetric tensegrity: exact reconstruction and certificates"};
    app.require_subcommand(1);

    std::string x_str, out_path, format = "json";
    double from = 0, to = 1, tol = 1e-12;
    int steps = 100;

    auto* analyze = app.add_subcommand("analyze", "per-point report: geometry, parameters, linking");
    analyze->add_option("--x", x_str, "stress parameter; p/q runs exactly, decimal numerically")
        ->required();
    analyze->add_option("--out", out_path, "output file (default stdout)");
    analyze->add_option("--tol", tol, "relative margin for numeric linking decisions");

    auto* sweep = app.add_subcommand("sweep", "geometry frames and a CSV summary over an x range");
    sweep->add_option("--from", from)->required();
    sweep->add_option("--to", to)->required();
    sweep->add_option("--steps", steps)->required();
    sweep->add_option("--out", out_path, "output directory (default ./sweep)");
    sweep->add_option("--format", format, "frame format: json or obj")
        ->check(CLI::IsMember({"json", "obj"}));
    sweep->add_option("--tol", tol, "relative margin for numeric linking decisions");

    auto* verify = app.add_subcommand("verify", "run every hard check; exit 1 on any failure");
    verify->add_option("--out", out_path, "report file (default stdout)");

    auto* persistence = app.add_subcommand("persistence", "sign-persistence certificate report");
    persistence->add_option("--out", out_path, "report file (default stdout)");

    auto* torsion = app.add_subcommand("torsion", "torsion group and model invariants report");
    torsion->add_option("--out", out_path, "report file (default stdout)");

    auto* trajectory = app.add_subcommand("trajectory", "CSV of (R1,R2) samples on the stable arc");
    trajectory->add_option("--steps", steps, "number of samples");
    trajectory->add_option("--out", out_path, "CSV file (default stdout)");

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed()) {
            auto x = parse_x(x_str);
            if (!x) {
                std::cerr << "analyze: cannot parse --x value '" << x_str << "'\n";
                return 2;
            }
            return cmd_analyze(*x, out_path, tol);
        }
        if (sweep->parsed())
            return cmd_sweep(from, to, steps, out_path.empty() ? "sweep" : out_path, format, tol);
        if (verify->parsed()) return cmd_verify(out_path);
        if (persistence->parsed()) return cmd_persistence(out_path);
        if (torsion->parsed()) return cmd_torsion(out_path);
        if (trajectory->parsed()) return cmd_trajectory(steps, out_path);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace a4link
