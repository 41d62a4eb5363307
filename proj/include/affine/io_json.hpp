#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "affine/oracle.hpp"
#include "affine/sampler.hpp"

namespace affine {

using Json = nlohmann::json;

Json partition_to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);

/// Census file payload: a JSON array of {"polys": [[coeffs...],[parts...]]
/// pairs, "count": n} records in canonical key order (polynomials by
/// degree, then ascending coefficient lists), stable across runs.
Json census_to_json(const Census& c);

/// One line of a sample dump. `path` may be null (the Markov sampler
/// yields no tableau path).
struct SampleParams {
    std::string algorithm;
    std::string u;  // "p/r", empty for the u-free conditional sampler
    long q = 2;
    int n = -1;  // conditional sampler target, -1 otherwise
};
Json sample_record(const Partition& lambda, const std::vector<int>* path,
                   std::uint64_t seed, const SampleParams& params);

}  // namespace affine
