#pragma once

#include <stdexcept>
#include <string>

namespace torsym {

// Contract violations named by the operations that raise them.

struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

struct not_lattice_map : std::runtime_error {
    explicit not_lattice_map(const std::string& what) : std::runtime_error(what) {}
};

struct not_finite : std::runtime_error {
    explicit not_finite(const std::string& what) : std::runtime_error(what) {}
};

struct inconsistent_gram : std::runtime_error {
    explicit inconsistent_gram(const std::string& what) : std::runtime_error(what) {}
};

struct invalid_params : std::runtime_error {
    explicit invalid_params(const std::string& what) : std::runtime_error(what) {}
};

struct unsupported_group : std::runtime_error {
    explicit unsupported_group(const std::string& what) : std::runtime_error(what) {}
};

struct non_integral_multiplicity : std::runtime_error {
    explicit non_integral_multiplicity(const std::string& what) : std::runtime_error(what) {}
};

struct not_a_homomorphism : std::runtime_error {
    explicit not_a_homomorphism(const std::string& what) : std::runtime_error(what) {}
};

struct conjugation_mismatch : std::runtime_error {
    explicit conjugation_mismatch(const std::string& what) : std::runtime_error(what) {}
};

struct rank_cap_exceeded : std::runtime_error {
    explicit rank_cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

struct tiling_failure : std::runtime_error {
    explicit tiling_failure(const std::string& what) : std::runtime_error(what) {}
};

struct one_dimensional_out_of_scope : std::runtime_error {
    one_dimensional_out_of_scope()
        : std::runtime_error(
              "positive-dimensional symmetry families reduce to the circle case and are not "
              "computed here") {}
};

}  // namespace torsym
