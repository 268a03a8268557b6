#pragma once

#include <stdexcept>

namespace ecgvae {

// Problems in user-supplied files or dataset content. The CLI maps these to a
// dedicated exit code, distinct from flag-usage errors and internal failures.
struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A confusion-matrix metric was requested whose denominator is zero.
struct undefined_metric_error : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace ecgvae
