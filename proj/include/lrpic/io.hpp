#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lrpic/crystal.hpp"
#include "lrpic/diagram.hpp"
#include "lrpic/picture.hpp"
#include "lrpic/reading.hpp"
#include "lrpic/tableau.hpp"

namespace lrpic::io {

using Json = nlohmann::ordered_json;

/// Thrown for structurally invalid input documents.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "5,2,1" -> (5,2,1). The empty string and "0" both denote the empty diagram.
inline Partition parse_partition(const std::string& text) {
    std::vector<int> rows;
    if (text.empty() || text == "0") return {};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || v < 0)
            throw std::invalid_argument("bad partition '" + text + "'");
        rows.push_back(v);
    }
    return Partition(std::move(rows));
}

/// "4,3/2,1" -> (4,3)/(2,1); no slash means a straight shape.
inline SkewShape parse_shape(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(parse_partition(text));
    return SkewShape(parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1)));
}

inline Json to_json(const Partition& p) {
    Json j = Json::array();
    for (int r : p.rows()) j.push_back(r);
    return j;
}

inline Json to_json(const Cell& c) { return Json::array({c.row, c.col}); }

inline Json to_json(const SkewShape& s) {
    return Json{{"outer", to_json(s.outer())}, {"inner", to_json(s.inner())}};
}

inline Json to_json(const Tableau& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows()) {
        Json r = Json::array();
        for (Entry e : row) r.push_back(e.code());
        rows.push_back(std::move(r));
    }
    return Json{{"shape", to_json(t.shape())}, {"rows", std::move(rows)}};
}

inline Json to_json(const Picture& p) {
    Json map = Json::array();
    auto dom = cells(p.domain());
    for (std::size_t k = 0; k < dom.size(); ++k)
        map.push_back(Json::array({to_json(dom[k]), to_json(p.image()[k])}));
    return Json{{"domain", to_json(p.domain())}, {"codomain", to_json(p.codomain())},
                {"map", std::move(map)}};
}

inline Json to_json(const AdmissibleOrder& o) {
    Json j = Json::array();
    for (const Cell& c : o.sequence()) j.push_back(to_json(c));
    return j;
}

inline Json to_json(const DecompositionReport& rep) {
    Json per = Json::object();
    for (const auto& [z, mult] : rep.per_shape) per[z.to_string()] = mult;
    return Json{{"lhs_card", rep.lhs_card}, {"rhs_card", rep.rhs_card}, {"per_shape", std::move(per)},
                {"pass", rep.pass}};
}

namespace detail {

inline int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw FormatError(std::string(what) + ": expected an integer");
    return j.get<int>();
}

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace detail

inline Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("partition: expected an array of integers");
    std::vector<int> rows;
    for (const auto& v : j) rows.push_back(detail::as_int(v, "partition"));
    try {
        return Partition(std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

inline Cell cell_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw FormatError("cell: expected [row,col]");
    Cell c{detail::as_int(j[0], "cell"), detail::as_int(j[1], "cell")};
    if (c.row < 1 || c.col < 1) throw FormatError("cell: coordinates are 1-based");
    return c;
}

inline SkewShape shape_from_json(const Json& j) {
    Partition outer = partition_from_json(detail::field(j, "outer"));
    Partition inner = j.contains("inner") ? partition_from_json(j.at("inner")) : Partition{};
    try {
        return SkewShape(std::move(outer), std::move(inner));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

inline Tableau tableau_from_json(const Json& j) {
    SkewShape shape = shape_from_json(detail::field(j, "shape"));
    const Json& rows = detail::field(j, "rows");
    if (!rows.is_array()) throw FormatError("tableau rows: expected an array of arrays");
    std::vector<std::vector<Entry>> er;
    for (const auto& row : rows) {
        if (!row.is_array()) throw FormatError("tableau rows: expected an array of arrays");
        er.emplace_back();
        for (const auto& v : row) {
            int code = detail::as_int(v, "tableau entry");
            if (code == 0) throw FormatError("tableau entry: 0 is not a letter");
            er.back().push_back(Entry::from_code(code));
        }
    }
    try {
        return Tableau::from_rows(std::move(shape), er);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

inline Picture picture_from_json(const Json& j) {
    SkewShape dom = shape_from_json(detail::field(j, "domain"));
    SkewShape cod = shape_from_json(detail::field(j, "codomain"));
    const Json& map = detail::field(j, "map");
    if (!map.is_array()) throw FormatError("picture map: expected an array of [cell,cell] pairs");
    CellMap m;
    for (const auto& pair : map) {
        if (!pair.is_array() || pair.size() != 2)
            throw FormatError("picture map: expected an array of [cell,cell] pairs");
        if (!m.emplace(cell_from_json(pair[0]), cell_from_json(pair[1])).second)
            throw FormatError("picture map: a domain cell appears twice");
    }
    try {
        return Picture::from_map(std::move(dom), std::move(cod), m);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

inline AdmissibleOrder order_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("order: expected an array of [row,col] pairs");
    std::vector<Cell> seq;
    for (const auto& c : j) seq.push_back(cell_from_json(c));
    try {
        return AdmissibleOrder(std::move(seq));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

/// Parses a document, turning parser errors into FormatError with the byte offset.
inline Json parse(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " +
                          e.what());
    }
}

enum class RenderMode { ascii, unicode };

/// k for unbarred letters; k' (ascii) or k with a combining overline (unicode).
inline std::string letter(Entry e, RenderMode mode) {
    std::string s = std::to_string(e.index());
    if (!e.is_barred()) return s;
    return mode == RenderMode::ascii ? s + "'" : s + "̅";
}

/// Boxed grid; cells of the inner diagram are drawn blank.
inline std::string render(const Tableau& t, RenderMode mode) {
    const SkewShape& shape = t.shape();
    std::size_t width = 1;
    for (Entry e : t.entries()) width = std::max(width, std::to_string(e.index()).size() + (e.is_barred() ? 1 : 0));
    const bool uni = mode == RenderMode::unicode;
    const std::string h = uni ? "─" : "-";
    const std::string v = uni ? "│" : "|";
    const std::string corner = uni ? "┼" : "+";
    auto border = [&](int cols) {
        std::string s;
        for (int c = 0; c < cols; ++c) {
            s += corner;
            for (std::size_t k = 0; k < width + 2; ++k) s += h;
        }
        return cols ? s + corner + "\n" : std::string("\n");
    };
    std::string out;
    int prev_cols = 0;
    for (std::size_t i = 1; i <= shape.num_rows(); ++i) {
        int cols = shape.outer().row(i);
        out += border(std::max(cols, prev_cols));
        for (int j = 1; j <= cols; ++j) {
            out += v + " ";
            std::string cell;
            std::size_t visible = 0;
            if (shape.contains({static_cast<int>(i), j})) {
                Entry e = t.at({static_cast<int>(i), j});
                cell = letter(e, mode);
                visible = std::to_string(e.index()).size() + (e.is_barred() ? 1 : 0);
            }
            out += std::string(width - visible, ' ') + cell + " ";
        }
        out += v + "\n";
        prev_cols = cols;
    }
    if (prev_cols) out += border(prev_cols);
    return out;
}

}  // namespace lrpic::io
