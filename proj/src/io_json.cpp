#include "affine/io_json.hpp"

#include <stdexcept>

namespace affine {

Json partition_to_json(const Partition& lambda) {
    Json arr = Json::array();
    for (int i = 1; i <= lambda.num_parts(); ++i) arr.push_back(lambda.part(i));
    return arr;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(parts);
}

Json census_to_json(const Census& c) {
    Json arr = Json::array();
    for (const auto& [key, count] : c.classes) {
        Json polys = Json::array();
        for (const auto& [phi, lambda] : key) {
            Json coeffs = Json::array();
            for (long v : phi.coeffs()) coeffs.push_back(v);
            polys.push_back(Json::array({coeffs, partition_to_json(lambda)}));
        }
        arr.push_back(Json{{"polys", polys}, {"count", count.get_si()}});
    }
    return arr;
}

Json sample_record(const Partition& lambda, const std::vector<int>* path,
                   std::uint64_t seed, const SampleParams& params) {
    Json rec;
    rec["partition"] = partition_to_json(lambda);
    rec["path"] = path ? Json(*path) : Json(nullptr);
    rec["seed"] = seed;
    Json p;
    p["algorithm"] = params.algorithm;
    if (!params.u.empty()) p["u"] = params.u;
    p["q"] = params.q;
    if (params.n >= 0) p["n"] = params.n;
    rec["params"] = p;
    return rec;
}

}  // namespace affine
