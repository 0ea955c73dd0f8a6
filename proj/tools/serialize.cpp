#include "serialize.hpp"

#include <stdexcept>

namespace sqc::cli {

Json to_json(const EdgeSet& g) {
    Json j;
    j["n"] = g.n();
    j["frames"] = g.frame_indices();
    j["windows"] = g.window_indices();
    return j;
}

EdgeSet edge_set_from_json(const Json& j) {
    try {
        const int n = j.at("n").get<int>();
        EdgeSet g(n);
        for (int i : j.at("frames").get<std::vector<int>>()) {
            if (i < 0 || i >= n) {
                throw std::invalid_argument("frame index out of range");
            }
            g.insert(EdgeId::frame(n, i));
        }
        for (int i : j.at("windows").get<std::vector<int>>()) {
            if (i < 0 || i >= n) {
                throw std::invalid_argument("window index out of range");
            }
            g.insert(EdgeId::window(n, i));
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed edge set JSON: ") + e.what());
    }
}

Json to_json(const ConvexLabel& label) {
    Json j;
    switch (label.variant) {
        case ConvexLabel::Variant::TrivialFull:
            j["variant"] = "full";
            break;
        case ConvexLabel::Variant::TrivialWindows:
            j["variant"] = "windows";
            break;
        case ConvexLabel::Variant::Strip:
            j["variant"] = "strip";
            j["j"] = label.j;
            j["k"] = label.k;
            break;
    }
    return j;
}

Json to_json(const DecomposeTable& table) {
    Json j;
    j["n"] = table.n;
    j["cells"] = Json::array();
    for (const auto& c : table.cells) {
        j["cells"].push_back({{"j", c.j}, {"k", c.k}, {"count", to_decimal(c.count)}});
    }
    j["total"] = to_decimal(table.total);
    return j;
}

}  // namespace sqc::cli
