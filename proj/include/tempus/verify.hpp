#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tempus/fractional.hpp"

namespace tempus::verify {

struct Report {
    std::string check;
    std::string scale;
    std::string func;
    std::string order;
    double lhs = 0;
    double rhs = 0;
    double abs_err = 0;
    double rel_err = 0; // |lhs-rhs| / max(1, |rhs|)
    double tolerance = 0;
    bool pass = false;
    // Counterexample checks pass when the discrepancy is FOUND.
    bool expect_mismatch = false;
    double runtime_ms = 0;
};

struct SuiteReport {
    std::vector<Report> reports;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }

    void write_text(std::ostream& out) const;
    // Columns: check,scale,f,order,lhs,rhs,abs_err,rel_err,pass
    void write_csv(std::ostream& out) const;
};

// lhs = n-fold repeated integral, rhs = sigma-kernel integral of order n.
Report check_cauchy(const ScaleFunction& f, const TimeScale& ts, double a,
                    double t, int n, double tol,
                    const std::string& scale_label);

// On the integer window [0,t]: triple nested sum vs the order-3 kernel form.
// Passes when the two disagree by more than tol.
Report counterexample_n3(long long t);

// I^alpha 1 on [0,t] of the real line vs the closed form t^alpha/Gamma(alpha+1).
Report check_real_reduction(double alpha, double t, double tol);

// Integer-order sigma-kernel integral vs its binomial expansion; an algebraic
// identity for every n and every scale.
Report check_expansion_equivalence(const ScaleFunction& f, const TimeScale& ts,
                                   double a, double t, int n, double tol,
                                   const std::string& scale_label);

struct SuiteConfig {
    // Restrict to checks whose name contains any of these substrings; empty
    // means run everything.
    std::vector<std::string> only;
};

SuiteReport run_suite(const SuiteConfig& cfg = {});

} // namespace tempus::verify
