#pragma once

#include <string>

#include "satlab/errors.hpp"
#include "satlab/family.hpp"

namespace satlab {

// closed-form minimum edge counts; param carries alpha for SAT_COMPLETE and
// t for the two-leaf families
enum class FormulaFamily { SAT_COMPLETE, SAT_K24, CSAT_K2T, SAT_K2T, SAT_K33 };

inline std::string to_string(FormulaFamily fam) {
    switch (fam) {
        case FormulaFamily::SAT_COMPLETE: return "complete";
        case FormulaFamily::SAT_K24: return "k24";
        case FormulaFamily::CSAT_K2T: return "csat_k2t";
        case FormulaFamily::SAT_K2T: return "k2t";
        case FormulaFamily::SAT_K33: return "k33";
    }
    return "?";
}

struct FormulaResult {
    long value = 0;
    std::string branch; // which piecewise case fired
};

inline FormulaResult sat_formula(FormulaFamily fam, int n, int param = 0) {
    switch (fam) {
        case FormulaFamily::SAT_COMPLETE: {
            int alpha = param;
            if (alpha < 3 || alpha > n)
                throw precondition_error("complete-pattern formula requires 3 <= alpha <= n");
            long a = alpha - 2;
            return {a * (a - 1) / 2 + a * (n - alpha + 2), "single case"};
        }
        case FormulaFamily::SAT_K24: {
            if (n < 6) throw precondition_error("two-leaf t=4 formula requires n >= 6");
            return {2L * n - 3, "single case"};
        }
        case FormulaFamily::CSAT_K2T: {
            int t = param;
            if (t < 5 || n < t + 2)
                throw precondition_error("connected two-leaf formula requires n >= t+2 >= 7");
            if (n == 2 * t - 1) return {static_cast<long>(t) * t - t, "n = 2t-1"};
            int r = n % (t - 1);
            if (r == 0) r = t - 1;
            long num;
            std::string branch;
            if (r == 1) {
                num = static_cast<long>(t) * n - (t + 2);
                branch = "residue 1, n != 2t-1";
            } else {
                num = static_cast<long>(t) * n - static_cast<long>(r) * (t - r + 1);
                branch = "residue " + std::to_string(r);
            }
            if (num % 2 != 0) throw internal_error("connected two-leaf formula is not integral");
            return {num / 2, branch};
        }
        case FormulaFamily::SAT_K2T: {
            int t = param;
            if (t < 5) throw precondition_error("general two-leaf formula requires t >= 5");
            if (n < construction_min_order(t))
                throw precondition_error("general two-leaf formula requires n >= " +
                                         std::to_string(construction_min_order(t)));
            int f = n % (t - 1);
            if (f == 0) f = t - 1;
            long num;
            std::string branch;
            // f is taken as n mod (t-1) normalized into 1..t-1
            if (t % 2 == 0) {
                num = 4L * t * n - static_cast<long>(t) * (t + 2);
                branch = "t even";
            } else if ((f + (t + 1) / 2) % 2 == 0) {
                num = 4L * t * n - static_cast<long>(t + 1) * (t + 1);
                branch = "t odd, f+(t+1)/2 even, f=" + std::to_string(f) + " (normalized residue)";
            } else {
                num = 4L * t * n - static_cast<long>(t + 3) * (t - 1);
                branch = "t odd, f+(t+1)/2 odd, f=" + std::to_string(f) + " (normalized residue)";
            }
            if (num % 8 != 0) throw internal_error("general two-leaf formula is not integral");
            return {num / 8, branch};
        }
        case FormulaFamily::SAT_K33: {
            if (n < 7) throw precondition_error("three-leaf triangle formula requires n >= 7");
            if (n % 2 == 1) return {(3L * n - 3) / 2, "n odd"};
            return {3L * n / 2, "n even"};
        }
    }
    throw precondition_error("unknown formula family");
}

} // namespace satlab
