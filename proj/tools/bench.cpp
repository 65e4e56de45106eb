// Times the OpenMP kernels against their serial reference implementations
// and checks that both produce the same answers.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "blockset/blocking.hpp"
#include "blockset/construct.hpp"
#include "blockset/inequality_audit.hpp"
#include "blockset/spectrum_solve.hpp"
#include "blockset/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace blockset;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0)
        .count();
}

void row(const std::string& name, double serial_ms, double parallel_ms,
         bool agree) {
    std::printf("%-28s %10.1f %10.1f %8.2fx   %s\n", name.c_str(), serial_ms,
                parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                agree ? "results agree" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    long pg_order = 31;
    long long audit_hi = 1000000;
    long long sweep_hi = 500;
    long blocking_q = 5;
    int threads = 0;

    CLI::App app{"serial vs OpenMP kernel benchmark"};
    app.add_option("--pg-order", pg_order, "projective plane order for the axiom kernel")
        ->capture_default_str();
    app.add_option("--audit-max", audit_hi, "upper q for the inequality audit")
        ->capture_default_str();
    app.add_option("--sweep-max", sweep_hi, "upper q for the feasibility sweep")
        ->capture_default_str();
    app.add_option("--blocking-q", blocking_q, "affine order for the search kernel")
        ->capture_default_str();
    app.add_option("--threads", threads, "OpenMP thread count (0 = default)")
        ->capture_default_str();
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled at build time; both columns run serial\n");
#endif
    std::printf("%-28s %10s %10s %9s\n", "kernel", "serial/ms", "omp/ms",
                "speedup");

    {
        auto [p, e] = [&] {
            long pp = pg_order, b = pg_order;
            for (long d = 2; d * d <= b; ++d)
                if (b % d == 0) { pp = d; break; }
            int ee = 0;
            while (b > 1) { b /= pp; ++ee; }
            return std::pair<long, int>(pp, ee);
        }();
        auto plane = build_desarguesian_projective(FiniteField::make(p, e));
        auto t0 = Clock::now();
        VerifyReport serial = verify_axioms_serial(plane);
        double ts = ms_since(t0);
        t0 = Clock::now();
        VerifyReport par = verify_axioms(plane);
        double tp = ms_since(t0);
        row("axiom verification PG(2," + std::to_string(pg_order) + ")", ts,
            tp, serial.pass == par.pass &&
                    serial.violations.size() == par.violations.size());
    }

    {
        auto t0 = Clock::now();
        auto serial = inequality_audit_serial(2, audit_hi);
        double ts = ms_since(t0);
        t0 = Clock::now();
        auto par = inequality_audit(2, audit_hi);
        double tp = ms_since(t0);
        bool agree = serial.violation_count() == par.violation_count();
        for (size_t i = 0; agree && i < serial.claims.size(); ++i)
            agree = serial.claims[i].evaluated == par.claims[i].evaluated &&
                    serial.claims[i].violations == par.claims[i].violations;
        row("inequality audit [2,1e" +
                std::to_string((int)std::log10((double)audit_hi)) + "]",
            ts, tp, agree);
    }

    {
        auto t0 = Clock::now();
        auto serial = feasibility_sweep_serial(25, sweep_hi);
        double ts = ms_since(t0);
        t0 = Clock::now();
        auto par = feasibility_sweep(25, sweep_hi);
        double tp = ms_since(t0);
        row("feasibility sweep [25," + std::to_string(sweep_hi) + "]", ts, tp,
            serial.checked == par.checked &&
                serial.feasible.size() == par.feasible.size());
    }

    {
        auto [p, e] = [&] {
            long pp = blocking_q, b = blocking_q;
            for (long d = 2; d * d <= b; ++d)
                if (b % d == 0) { pp = d; break; }
            int ee = 0;
            while (b > 1) { b /= pp; ++ee; }
            return std::pair<long, int>(pp, ee);
        }();
        auto plane = build_desarguesian_affine(FiniteField::make(p, e));
        SearchOptions serial_opts;
        serial_opts.deterministic = true;
        auto t0 = Clock::now();
        Certificate cs = min_blocking(plane, serial_opts);
        double ts = ms_since(t0);
        SearchOptions par_opts;
        par_opts.deterministic = false;
        par_opts.threads = threads > 0 ? threads : 0;
        t0 = Clock::now();
        Certificate cp = min_blocking(plane, par_opts);
        double tp = ms_since(t0);
        row("min blocking AG(2," + std::to_string(blocking_q) + ")", ts, tp,
            cs.value == cp.value && cs.status == cp.status);
    }
    return 0;
}
