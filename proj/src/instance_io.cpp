#include "dinitz/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dinitz {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InstanceParseError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Symbols are integers or strings; one document may not mix the two.
Symbol parse_symbol(const json& j, bool& saw_int, bool& saw_string) {
    if (j.is_number_integer()) {
        saw_int = true;
        return Symbol(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        saw_string = true;
        return Symbol(j.get<std::string>());
    }
    throw InstanceParseError("symbols must be integers or strings, got " + j.dump());
}

json symbol_json(const Symbol& s) {
    if (std::holds_alternative<std::int64_t>(s)) return std::get<std::int64_t>(s);
    return std::get<std::string>(s);
}

}  // namespace

ListAssignment parse_instance_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InstanceParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InstanceParseError("instance must be a JSON object");
    for (const std::string key : {"r", "n", "lists"}) {
        if (!doc.contains(key)) throw InstanceParseError("instance is missing \"" + key + "\"");
    }
    if (!doc["r"].is_number_integer() || !doc["n"].is_number_integer()) {
        throw InstanceParseError("\"r\" and \"n\" must be integers");
    }
    const int rows = doc["r"].get<int>();
    const int cols = doc["n"].get<int>();
    if (rows < 1 || cols < 1) throw InstanceParseError("\"r\" and \"n\" must be positive");

    const json& lists = doc["lists"];
    if (!lists.is_array() || lists.size() != static_cast<std::size_t>(rows)) {
        throw InstanceParseError("\"lists\" must be an array of r rows");
    }
    bool saw_int = false, saw_string = false;
    std::vector<std::vector<std::vector<Symbol>>> parsed(rows);
    for (int i = 0; i < rows; ++i) {
        const json& row = lists[i];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(cols)) {
            throw InstanceParseError("row " + std::to_string(i + 1) +
                                     " must hold n cell lists");
        }
        parsed[i].resize(cols);
        for (int j = 0; j < cols; ++j) {
            const json& cell = row[j];
            if (!cell.is_array() || cell.empty()) {
                throw InstanceParseError("cell (" + std::to_string(i + 1) + "," +
                                         std::to_string(j + 1) +
                                         ") must be a non-empty array of symbols");
            }
            for (const json& sym : cell) {
                parsed[i][j].push_back(parse_symbol(sym, saw_int, saw_string));
            }
        }
    }
    if (saw_int && saw_string) {
        throw InstanceParseError("one instance may not mix integer and string symbols");
    }
    try {
        return ListAssignment(rows, cols, std::move(parsed));
    } catch (const std::invalid_argument& e) {
        throw InstanceParseError(e.what());
    }
}

ListAssignment load_instance_file(const std::filesystem::path& path) {
    return parse_instance_json(read_file(path));
}

std::string canonical_instance_json(const ListAssignment& lists) {
    json doc;
    doc["r"] = lists.rows();
    doc["n"] = lists.cols();
    json rows = json::array();
    for (int i = 1; i <= lists.rows(); ++i) {
        json row = json::array();
        for (int j = 1; j <= lists.cols(); ++j) {
            json cell = json::array();
            for (const Symbol& s : lists.list_symbols(i, j)) {
                cell.push_back(symbol_json(s));  // dense order is sorted symbol order
            }
            row.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
    }
    doc["lists"] = std::move(rows);
    return doc.dump();
}

SymbolGrid parse_candidate_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InstanceParseError(std::string("invalid JSON: ") + e.what());
    }
    const json* grid = &doc;
    if (doc.is_object()) {
        if (!doc.contains("rectangle")) {
            throw InstanceParseError("candidate object is missing \"rectangle\"");
        }
        grid = &doc["rectangle"];
    }
    if (!grid->is_array() || grid->empty()) {
        throw InstanceParseError("candidate must be a non-empty 2-D array");
    }
    bool saw_int = false, saw_string = false;
    SymbolGrid out;
    for (const json& row : *grid) {
        if (!row.is_array() || row.empty()) {
            throw InstanceParseError("candidate rows must be non-empty arrays");
        }
        std::vector<Symbol> parsed;
        for (const json& sym : row) parsed.push_back(parse_symbol(sym, saw_int, saw_string));
        out.push_back(std::move(parsed));
    }
    if (saw_int && saw_string) {
        throw InstanceParseError("one candidate may not mix integer and string symbols");
    }
    return out;
}

SymbolGrid load_candidate_file(const std::filesystem::path& path) {
    return parse_candidate_json(read_file(path));
}

}  // namespace dinitz
