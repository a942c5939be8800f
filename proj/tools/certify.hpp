#ifndef SPTRI_TOOLS_CERTIFY_HPP
#define SPTRI_TOOLS_CERTIFY_HPP

#include <string>

#include "manifest.hpp"

namespace sptri::cli {

/// Full invariant suite for one construction; every check records a
/// VerificationReport in the manifest.
RunManifest certify_cs_product(int d);
RunManifest certify_balanced_product(int d);
RunManifest certify_b_complex(int d);
RunManifest certify_shelling(int d, int i);
RunManifest certify_inductive(int i, int d);

/// Everything up to max_d, optionally with concurrent targets.
std::vector<RunManifest> certify_all(int max_d, int jobs);

} // namespace sptri::cli

#endif
