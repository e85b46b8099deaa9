#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "char2/par.hpp"
#include "char2/runner.hpp"

using char2::RunConfig;

namespace {

void emit(const char2::Json& report, const std::string& out_path,
          std::chrono::steady_clock::time_point start) {
    std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        out << text;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
    bool ok = report.value("ok", false);
    std::cerr << report.value("command", std::string("?")) << ": "
              << (ok ? "ok" : "FAILED") << " (" << ms << " ms)\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact characteristic-two geometry of principal minors and Pfaffians"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    RunConfig cfg;
    std::string out_path;
    int threads = 0;

    app.add_option("--threads", threads, "worker threads for the parallel kernels (0 = auto)");
    app.add_flag("--timing", cfg.timing, "include elapsed_ms in the JSON report");
    app.add_option("--budget-ms", cfg.budget_ms, "wall-clock budget (overrides CHAR2_BUDGET_MS)");
    app.add_option("--out", out_path, "write the JSON report to a file instead of stdout");

    auto add_ring = [&](CLI::App* sub) {
        sub->add_option("--ring", cfg.ring, "coefficient ring: f2, f4, f8, ..., f3, q, z");
    };

    auto* verify = app.add_subcommand("verify", "symbolic identity checks");
    verify->require_subcommand(1);
    for (const char* which : {"theorem", "prop31", "frobenius"}) {
        auto* sub = verify->add_subcommand(which);
        sub->add_option("--n", cfg.n, "matrix size")->required();
        add_ring(sub);
        sub->callback([&cfg, which] { cfg.command = std::string("verify-") + which; });
    }

    auto* minors = app.add_subcommand("minors", "all principal minors");
    minors->add_option("--n", cfg.n, "matrix size");
    add_ring(minors);
    minors->add_option("--matrix", cfg.matrix_path, "matrix JSON file");
    minors->callback([&cfg] { cfg.command = "minors"; });

    auto* pfaff = app.add_subcommand("pfaffians", "all sub-Pfaffians");
    pfaff->add_option("--n", cfg.n, "matrix size");
    add_ring(pfaff);
    pfaff->add_option("--matrix", cfg.matrix_path, "matrix JSON file");
    pfaff->callback([&cfg] { cfg.command = "pfaffians"; });

    auto* hyper = app.add_subcommand("hyperdet", "the 2x2x2 hyperdeterminant");
    hyper->add_flag("--mod2", cfg.mod2, "reduce mod 2 and report the square root");
    hyper->callback([&cfg] { cfg.command = "hyperdet"; });

    auto* ext = app.add_subcommand("exterior", "exterior-algebra checks");
    ext->add_option("--n", cfg.n, "half-dimension");
    ext->add_flag("--check-sl2", cfg.check_sl2, "verify the bracket relations over Q");
    ext->add_flag("--gow", cfg.gow, "contraction codimension over F2");
    ext->add_option("--project", cfg.subspace_path, "subspace JSON file to project");
    ext->callback([&cfg] { cfg.command = "exterior"; });

    auto* enumerate = app.add_subcommand("enumerate", "finite-geometry enumeration");
    enumerate->require_subcommand(1);
    auto* lg = enumerate->add_subcommand("lg", "Lagrangian subspaces");
    lg->add_option("--n", cfg.n, "half-dimension")->required();
    lg->add_option("--q", cfg.q, "field size");
    lg->callback([&cfg] { cfg.command = "enumerate-lg"; });
    auto* spinor = enumerate->add_subcommand("spinor", "even family of maximal isotropics");
    spinor->add_option("--m", cfg.m, "spinor index")->required();
    spinor->add_option("--q", cfg.q, "field size");
    spinor->callback([&cfg] { cfg.command = "enumerate-spinor"; });

    auto* images = app.add_subcommand("images", "image point sets of the minor and Pfaffian maps");
    images->add_option("--n", cfg.n, "matrix size")->required();
    images->add_option("--q", cfg.q, "field size (2)");
    images->add_flag("--compare", cfg.compare, "also compare with the quadric zero locus");
    images->callback([&cfg] { cfg.command = "images"; });

    auto* fiber = app.add_subcommand("fiber", "fiber size of the minor map over F_p");
    fiber->add_option("--n", cfg.n, "matrix size")->required();
    fiber->add_option("--p", cfg.p, "odd prime")->required();
    fiber->add_option("--matrix", cfg.matrix_path, "matrix JSON file (default: all ones)");
    fiber->callback([&cfg] { cfg.command = "fiber"; });

    auto* quadrics = app.add_subcommand("quadrics", "quadrics vanishing on a variety");
    quadrics
        ->add_option("--variety", cfg.variety,
                     "zn | spinor | gr36 | lg36-tangential | gr36-tangential | "
                     "segre-tangential | s6-tangential")
        ->required();
    quadrics->add_option("--n", cfg.n, "matrix size for zn");
    quadrics->add_option("--m", cfg.m, "alternating size for spinor");
    add_ring(quadrics);
    quadrics->callback([&cfg] { cfg.command = "quadrics"; });

    auto* tang = app.add_subcommand("tangential", "tangential-variety quadrics");
    tang->add_option("--case", cfg.fts_case, "q0 | q1 | q2 | q4")->required();
    add_ring(tang);
    tang->callback([&cfg] { cfg.command = "tangential"; });

    auto* freud = app.add_subcommand("freudenthal", "quartic invariants of triple systems");
    freud->add_option("--case", cfg.fts_case, "q0 | q1 | e7")->required();
    freud->add_flag("--mod2", cfg.mod2, "also reduce mod 2");
    freud->add_option("--eval", cfg.eval_path, "point JSON file to evaluate at");
    freud->callback([&cfg] { cfg.command = "freudenthal"; });

    auto* runall = app.add_subcommand("run-all", "acceptance checks");
    runall->add_option("--profile", cfg.profile, "fast | full | slow");
    runall->callback([&cfg] { cfg.command = "run-all"; });

    CLI11_PARSE(app, argc, argv);

    char2::par::set_threads(threads);
    auto start = std::chrono::steady_clock::now();
    try {
        char2::Json report = char2::run(cfg);
        emit(report, out_path, start);
        return report.value("ok", false) ? 0 : 1;
    } catch (const char2::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return char2::exit_code_for_error(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
