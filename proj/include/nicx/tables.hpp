#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "nicx/homology.hpp"
#include "nicx/series.hpp"

namespace nicx {

struct TableRequest {
    int id = 0;       // 1..6
    int n_lo = -1;    // -1 = table default
    int n_hi = -1;
    int order = kDefaultSeriesOrder; // table 6 truncation
    bool force = false;
    int jobs = 1;
};

struct TableResult {
    std::string title;
    nlohmann::json rows; // array; every cell carries a source label
    bool all_match = true;
};

TableResult run_table(const TableRequest& req);

// reference values shipped with the binary, keyed table -> row
const nlohmann::json& expected_tables();

HomologyGroup group_from_spec(const nlohmann::json& spec);

} // namespace nicx
