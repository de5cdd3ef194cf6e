#include "keller/map_io.hpp"

#include "keller/parse.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace keller {

namespace {

constexpr const char* kFormatLine = "# format: polymap-v1";

struct Line {
    std::string text;
    int number;  // 1-based
};

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool is_blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void fail(const std::string& source, const std::string& message) {
    throw std::runtime_error(source + ": " + message);
}

// splits "F12" into ("F", 12); index must be a nonempty trailing digit run
std::pair<std::string, std::size_t> split_component_name(const std::string& source,
                                                         const std::string& name) {
    std::size_t digits = name.size();
    while (digits > 0 && std::isdigit(static_cast<unsigned char>(name[digits - 1]))) --digits;
    if (digits == name.size() || digits == 0)
        fail(source, "component name '" + name + "' must be an identifier ending in its 1-based index");
    const std::size_t index = std::stoul(name.substr(digits));
    if (index == 0) fail(source, "component index in '" + name + "' must be positive");
    return {name.substr(0, digits), index};
}

void check_vars(const std::string& source, const std::vector<std::string>& vars) {
    if (vars.empty()) fail(source, "no variables declared");
    for (const auto& v : vars) {
        if (!is_valid_identifier(v)) fail(source, "invalid variable name '" + v + "'");
        if (std::count(vars.begin(), vars.end(), v) > 1)
            fail(source, "duplicate variable name '" + v + "'");
    }
}

MapDocument parse_text_document(const std::vector<Line>& lines, const std::string& source) {
    MapDocument doc;
    doc.source_name = source;
    doc.format_tag = MapFormat::Text;

    std::size_t cursor = 0;
    {
        std::istringstream header(lines[cursor].text);
        std::string keyword;
        header >> keyword;
        if (keyword != "vars")
            fail(source, "expected a 'vars' declaration on line " + std::to_string(lines[cursor].number));
        std::string name;
        while (header >> name) doc.vars.push_back(name);
        check_vars(source, doc.vars);
        ++cursor;
    }

    const std::size_t n = doc.vars.size();
    std::vector<Polynomial> components(n, Polynomial(n));
    std::vector<bool> defined(n, false);
    std::string prefix;
    for (; cursor < lines.size(); ++cursor) {
        const auto& [text, number] = lines[cursor];
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            fail(source, "expected '<name> = <expression>' on line " + std::to_string(number));
        const std::string name = trimmed(text.substr(0, eq));
        auto [this_prefix, index] = split_component_name(source, name);
        if (prefix.empty())
            prefix = this_prefix;
        else if (prefix != this_prefix)
            fail(source, "component name '" + name + "' does not match prefix '" + prefix + "'");
        if (index > n)
            fail(source, "component " + name + " exceeds the declared variable count");
        if (defined[index - 1]) fail(source, "component " + name + " defined more than once");
        // blank out the '<name> =' head so reported columns match the file
        std::string padded(eq + 1, ' ');
        padded += text.substr(eq + 1);
        components[index - 1] = parse_poly(padded, doc.vars, number);
        defined[index - 1] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!defined[i])
            fail(source, "component " + (prefix.empty() ? std::string("F") : prefix) +
                             std::to_string(i + 1) + " not defined");
    doc.components = std::move(components);
    doc.component_prefix = prefix;
    return doc;
}

MapDocument parse_json_document(const std::string& body, const std::string& source) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
        fail(source, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vars") || !j.contains("components"))
        fail(source, "JSON document must carry 'vars' and 'components'");

    MapDocument doc;
    doc.source_name = source;
    doc.format_tag = MapFormat::Json;
    for (const auto& v : j.at("vars")) {
        if (!v.is_string()) fail(source, "'vars' entries must be strings");
        doc.vars.push_back(v.get<std::string>());
    }
    check_vars(source, doc.vars);

    const std::size_t n = doc.vars.size();
    std::vector<Polynomial> components(n, Polynomial(n));
    std::vector<bool> defined(n, false);
    std::string prefix;
    for (const auto& comp : j.at("components")) {
        if (!comp.is_object() || !comp.contains("name") || !comp.contains("terms"))
            fail(source, "each component needs 'name' and 'terms'");
        const std::string name = comp.at("name").get<std::string>();
        auto [this_prefix, index] = split_component_name(source, name);
        if (prefix.empty())
            prefix = this_prefix;
        else if (prefix != this_prefix)
            fail(source, "component name '" + name + "' does not match prefix '" + prefix + "'");
        if (index > n) fail(source, "component " + name + " exceeds the declared variable count");
        if (defined[index - 1]) fail(source, "component " + name + " defined more than once");
        std::vector<Term> terms;
        for (const auto& term : comp.at("terms")) {
            if (!term.is_object() || !term.contains("coeff") || !term.contains("exps"))
                fail(source, "each term needs 'coeff' and 'exps'");
            Rational c;
            try {
                c = Rational::from_string(term.at("coeff").get<std::string>());
            } catch (const std::invalid_argument& e) {
                fail(source, e.what());
            }
            const auto& exps = term.at("exps");
            if (!exps.is_array() || exps.size() != n)
                fail(source, "term exponent vector must have one entry per variable");
            std::vector<std::uint32_t> e;
            e.reserve(n);
            for (const auto& x : exps) {
                if (!x.is_number_integer() || x.get<long long>() < 0)
                    fail(source, "exponents must be nonnegative integers");
                e.push_back(static_cast<std::uint32_t>(x.get<long long>()));
            }
            terms.push_back(Term{Monomial(std::move(e)), std::move(c)});
        }
        components[index - 1] = Polynomial::from_terms(n, std::move(terms));
        defined[index - 1] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!defined[i])
            fail(source, "component " + (prefix.empty() ? std::string("F") : prefix) +
                             std::to_string(i + 1) + " not defined");
    doc.components = std::move(components);
    doc.component_prefix = prefix;
    return doc;
}

}  // namespace

MapDocument make_document(const PolyMap& map, std::vector<std::string> vars,
                          std::string component_prefix) {
    if (vars.size() != map.nvars())
        throw std::invalid_argument("make_document: variable name count mismatch");
    MapDocument doc;
    doc.vars = std::move(vars);
    doc.components = map.components();
    doc.component_prefix = std::move(component_prefix);
    doc.source_name = "<memory>";
    return doc;
}

std::vector<std::string> inverse_var_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    return names;
}

MapDocument parse_map_file(std::istream& in, const std::string& source_name) {
    std::vector<Line> content;
    std::string raw;
    int number = 0;
    bool json = false;
    bool decided = false;
    std::ostringstream json_body;
    while (std::getline(in, raw)) {
        ++number;
        const std::string stripped = strip_comment(raw);
        if (is_blank(stripped)) continue;
        if (!decided) {
            json = trimmed(stripped).front() == '{';
            decided = true;
        }
        if (json)
            json_body << stripped << '\n';
        else
            content.push_back(Line{stripped, number});
    }
    if (!decided) fail(source_name, "empty document");
    return json ? parse_json_document(json_body.str(), source_name)
                : parse_text_document(content, source_name);
}

MapDocument parse_map_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return parse_map_file(in, path);
}

std::string emit_map_json_body(const MapDocument& doc) {
    if (doc.vars.size() != doc.components.size())
        throw std::invalid_argument("emit_map: document is not square");
    nlohmann::ordered_json j;
    j["vars"] = doc.vars;
    j["components"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < doc.components.size(); ++i) {
        nlohmann::ordered_json comp;
        comp["name"] = doc.component_prefix + std::to_string(i + 1);
        comp["terms"] = nlohmann::ordered_json::array();
        for (const auto& t : doc.components[i].terms()) {
            nlohmann::ordered_json term;
            term["coeff"] = t.coeff.to_string();
            term["exps"] = t.mono.exponents();
            comp["terms"].push_back(std::move(term));
        }
        j["components"].push_back(std::move(comp));
    }
    return j.dump(2);
}

std::string emit_map(const MapDocument& doc, MapFormat format) {
    if (doc.vars.size() != doc.components.size())
        throw std::invalid_argument("emit_map: document is not square");
    std::ostringstream os;
    os << kFormatLine << '\n';
    if (format == MapFormat::Text) {
        os << "vars";
        for (const auto& v : doc.vars) os << ' ' << v;
        os << '\n';
        for (std::size_t i = 0; i < doc.components.size(); ++i)
            os << doc.component_prefix << i + 1 << " = " << to_string(doc.components[i], doc.vars)
               << '\n';
        return os.str();
    }
    os << emit_map_json_body(doc) << '\n';
    return os.str();
}

}  // namespace keller
