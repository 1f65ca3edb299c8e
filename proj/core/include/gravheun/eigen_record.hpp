#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gravheun {

enum class EigenMethod { exact_formula, determinant_root, fd_oracle, hermite_quantization };

std::string_view to_string(EigenMethod m);

// One located eigenvalue. c is the dimensionless spectral parameter of
// psi'' + (c - q^2) psi = 0, lambda = c + 3 b^2 and E = lambda * hbar*omega / 2.
struct EigenRecord {
    double c = 0.0;
    double lambda = 0.0;
    double E_over_hbar_omega = 0.0;
    int index = 0;
    double residual = 0.0;
    EigenMethod method = EigenMethod::exact_formula;
    // Free-form tags: "below_ground", "anomalous", ...
    std::vector<std::string> tags;

    bool has_tag(std::string_view tag) const;
};

// Builds a record from c with lambda and E filled in consistently.
EigenRecord make_record(double c, double b, int index, double residual, EigenMethod method);

}  // namespace gravheun
