#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rcyclo/pipelines.hpp"

namespace rcyclo {

inline constexpr const char* kSchema = "rcyclo/1";

class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

Json to_json(const AbelianGroup& g);
AbelianGroup abelian_group_from_json(const Json& j);

Json to_json(const PiTable& t);
PiTable pi_table_from_json(const Json& j);

Json to_json(const FiberReport& r);
FiberReport fiber_report_from_json(const Json& j);

/// A page of a spectral sequence restricted to a window, as exported to JSON.
struct PageExport {
    std::string presentation;
    std::uint32_t p = 2;
    int page = 2;
    int w = 0;
    int s_lo = 0, s_hi = 0, t_lo = 0, t_hi = 0;
    struct Entry {
        int s = 0, t = 0;
        std::vector<std::string> classes;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> pieces;  // nonzero pieces, ordered by (t, s)

    bool operator==(const PageExport&) const = default;
};

PageExport export_page(const SpectralSequence& ss, int page, const Box& window);
Json to_json(const PageExport& e);
PageExport page_from_json(const Json& j);

Json to_json(const CollapseCertificate& c);
Json to_json(const MackeyFunctor& M);
Json to_json(const TcrReport& r);
Json to_json(const OddReport& r);
Json to_json(const GfpReport& r);
Json to_json(const PerfectReport& r);
Json to_json(const D8Report& r);

/// Deterministic text form (sorted keys, two-space indent, trailing newline).
std::string dump(const Json& j);
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

struct GoldenDiff {
    bool equal = true;
    std::optional<int> first_mismatch;
    std::vector<std::string> lines;
};

/// Per-degree comparison of markers against a stored table (pi_table or fiber_report).
GoldenDiff compare_golden(const PiTable& actual, const Json& golden);

}  // namespace rcyclo
