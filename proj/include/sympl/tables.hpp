#pragma once

#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "derivations.hpp"
#include "rational.hpp"

namespace sympl {

enum class OutputFormat { Csv, Text, Structured };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "text") return OutputFormat::Text;
    if (s == "structured") return OutputFormat::Structured;
    throw std::invalid_argument("unknown format: " + s);
}

struct CountRow {
    int degree = 0;
    std::uint64_t count = 0;
};

struct GradedRow {
    int degree = 0;
    long ambient = 0;
    long relation_rank = 0;
    long quotient = 0;
    long admissible = 0;
    long monomial_rank = 0;
};

struct DimRow {
    int degree = 0;
    Int dim;
};

namespace detail {

template <typename Row, typename Cell>
void render_table(std::ostream& os, OutputFormat fmt, const char* json_key,
                  const std::vector<std::string>& headers, const std::vector<Row>& rows,
                  Cell&& cell) {
    if (fmt == OutputFormat::Csv) {
        for (std::size_t c = 0; c < headers.size(); ++c)
            os << (c ? "," : "") << headers[c];
        os << "\n";
        for (const Row& r : rows) {
            for (std::size_t c = 0; c < headers.size(); ++c)
                os << (c ? "," : "") << cell(r, c);
            os << "\n";
        }
    } else if (fmt == OutputFormat::Text) {
        std::vector<std::size_t> width(headers.size());
        for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
        for (const Row& r : rows)
            for (std::size_t c = 0; c < headers.size(); ++c)
                width[c] = std::max(width[c], cell(r, c).size());
        for (std::size_t c = 0; c < headers.size(); ++c)
            os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << headers[c];
        os << "\n";
        for (const Row& r : rows) {
            for (std::size_t c = 0; c < headers.size(); ++c)
                os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << cell(r, c);
            os << "\n";
        }
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const Row& r : rows) {
            nlohmann::json obj;
            for (std::size_t c = 0; c < headers.size(); ++c) {
                std::string v = cell(r, c);
                // degrees and counts fit in long long except the dim column,
                // which stays a string to keep arbitrary precision intact
                try {
                    std::size_t used = 0;
                    long long num = std::stoll(v, &used);
                    if (used == v.size()) {
                        obj[headers[c]] = num;
                        continue;
                    }
                } catch (...) {
                }
                obj[headers[c]] = v;
            }
            arr.push_back(std::move(obj));
        }
        os << nlohmann::json{{json_key, std::move(arr)}}.dump(2) << "\n";
    }
}

}  // namespace detail

inline void render_counts(std::ostream& os, OutputFormat fmt, const std::vector<CountRow>& rows) {
    detail::render_table(os, fmt, "counts", {"degree", "count"}, rows,
                         [](const CountRow& r, std::size_t c) {
                             return c == 0 ? std::to_string(r.degree) : std::to_string(r.count);
                         });
}

inline void render_graded(std::ostream& os, OutputFormat fmt, const std::vector<GradedRow>& rows) {
    detail::render_table(
        os, fmt, "slices",
        {"degree", "ambient_dim", "relation_rank", "quotient_dim", "admissible_count",
         "monomial_rank"},
        rows, [](const GradedRow& r, std::size_t c) {
            switch (c) {
                case 0: return std::to_string(r.degree);
                case 1: return std::to_string(r.ambient);
                case 2: return std::to_string(r.relation_rank);
                case 3: return std::to_string(r.quotient);
                case 4: return std::to_string(r.admissible);
                default: return std::to_string(r.monomial_rank);
            }
        });
}

inline void render_dims(std::ostream& os, OutputFormat fmt, const std::vector<DimRow>& rows) {
    detail::render_table(os, fmt, "dims", {"degree", "dim"}, rows,
                         [](const DimRow& r, std::size_t c) {
                             return c == 0 ? std::to_string(r.degree) : to_string(r.dim);
                         });
}

// One line per identity: status, description, scalar when meaningful.
inline bool render_reports(std::ostream& os, const std::vector<IdentityReport>& reports) {
    bool all_ok = true;
    for (const IdentityReport& rep : reports) {
        os << (rep.ok ? "ok   " : "FAIL ") << rep.name;
        if (rep.proportional) os << "  scalar=" << to_string(rep.scalar);
        os << "\n";
        all_ok = all_ok && rep.ok;
    }
    return all_ok;
}

}  // namespace sympl
