#pragma once

#include <json.hpp>

#include "sqc/convexity.hpp"
#include "sqc/edge_set.hpp"
#include "sqc/treecount.hpp"

namespace sqc::cli {

using Json = nlohmann::ordered_json;

/// {"n": int, "frames": [sorted ints], "windows": [sorted ints]}
Json to_json(const EdgeSet& g);
/// Inverse of to_json(EdgeSet); throws std::invalid_argument on malformed input.
EdgeSet edge_set_from_json(const Json& j);

/// {"variant": "full"|"windows"|"strip", "j": int?, "k": int?}
Json to_json(const ConvexLabel& label);

/// {"n": int, "cells": [{"j", "k", "count": decimal string}], "total": decimal string}
Json to_json(const DecomposeTable& table);

}  // namespace sqc::cli
