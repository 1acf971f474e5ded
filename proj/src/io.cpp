#include "ctw/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>

#include "ctw/error.hpp"

namespace ctw {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, int line, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(std::string("expected integer for ") + what + ", got '" + std::string(tok) + "'", line);
    return value;
}

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- text graph

Graph parse_graph_text(std::string_view text) {
    int n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    std::vector<int> edge_lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (n >= 0) throw ParseError("duplicate problem line", line_no);
            if (tok.size() != 3) throw ParseError("problem line must be 'p <n> <m>'", line_no);
            long long nn = parse_int(tok[1], line_no, "vertex count");
            m = parse_int(tok[2], line_no, "edge count");
            if (nn < 0 || m < 0 || nn > 100'000'000) throw ParseError("invalid counts in problem line", line_no);
            n = static_cast<int>(nn);
        } else if (tok[0] == "e") {
            if (n < 0) throw ParseError("edge line before problem line", line_no);
            if (tok.size() != 3) throw ParseError("edge line must be 'e <u> <v>'", line_no);
            long long a = parse_int(tok[1], line_no, "endpoint");
            long long b = parse_int(tok[2], line_no, "endpoint");
            if (a < 1 || a > n || b < 1 || b > n) throw ParseError("edge endpoint out of range 1.." + std::to_string(n), line_no);
            if (a == b) throw ParseError("self-loop", line_no);
            edges.push_back(make_edge(static_cast<int>(a - 1), static_cast<int>(b - 1)));
            edge_lines.push_back(line_no);
        } else {
            throw ParseError("unknown line type '" + std::string(tok[0]) + "'", line_no);
        }
    }
    if (n < 0) throw ParseError("missing problem line");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("problem line announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    std::vector<std::size_t> idx(edges.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (edges[idx[i]] == edges[idx[i - 1]]) throw ParseError("duplicate edge", edge_lines[idx[i]]);
    return Graph(n, edges);
}

Graph read_graph_text(std::istream& in) { return parse_graph_text(slurp(in)); }

void write_graph_text(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (Edge e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string format_graph_text(const Graph& g) {
    std::ostringstream ss;
    write_graph_text(ss, g);
    return ss.str();
}

// ---------------------------------------------------------------- layout text

LinearLayout parse_layout_text(std::string_view text) {
    std::vector<Vertex> order;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;
        for (auto t : tok) {
            long long v = parse_int(t, line_no, "vertex id");
            if (v < 1 || v > 100'000'000) throw ParseError("vertex id out of range", line_no);
            order.push_back(static_cast<Vertex>(v - 1));
        }
    }
    try {
        return LinearLayout(std::move(order));
    } catch (const InvalidLayoutError& e) {
        throw ParseError(std::string("layout is not a permutation: ") + e.what());
    }
}

LinearLayout read_layout_text(std::istream& in) { return parse_layout_text(slurp(in)); }

void write_layout_text(std::ostream& out, const LinearLayout& layout) {
    for (int i = 0; i < layout.size(); ++i) out << (i ? " " : "") << layout.at(i) + 1;
    out << '\n';
}

std::string format_layout_text(const LinearLayout& layout) {
    std::ostringstream ss;
    write_layout_text(ss, layout);
    return ss.str();
}

// ---------------------------------------------------------------- JSON

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (Edge e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
    j["edges"] = std::move(edges);
    auto labels = nlohmann::json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!g.label(v).empty()) labels[std::to_string(v + 1)] = g.label(v);
    j["labels"] = std::move(labels);
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    try {
        const int n = j.at("n").get<int>();
        if (n < 0) throw ParseError("negative vertex count in graph JSON");
        GraphBuilder b(n);
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("graph JSON edge must be a pair");
            int a = e[0].get<int>(), c = e[1].get<int>();
            if (a < 1 || a > n || c < 1 || c > n) throw ParseError("graph JSON edge endpoint out of range");
            if (a == c) throw ParseError("graph JSON self-loop");
            if (!b.add_edge(a - 1, c - 1)) throw ParseError("graph JSON duplicate edge");
        }
        if (j.contains("labels")) {
            for (const auto& [key, value] : j.at("labels").items()) {
                int v = std::stoi(key);
                if (v < 1 || v > n) throw ParseError("graph JSON label id out of range");
                b.set_label(v - 1, value.get<std::string>());
            }
        }
        return b.build();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("graph JSON: label key is not an integer");
    }
}

nlohmann::json layout_to_json(const LinearLayout& layout) {
    auto a = nlohmann::json::array();
    for (Vertex v : layout.order()) a.push_back(v + 1);
    return a;
}

LinearLayout layout_from_json(const nlohmann::json& j) {
    try {
        std::vector<Vertex> order;
        for (const auto& v : j) order.push_back(v.get<int>() - 1);
        return LinearLayout(std::move(order));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("layout JSON: ") + e.what());
    } catch (const InvalidLayoutError& e) {
        throw ParseError(std::string("layout JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------- DOT

std::string format_dot(const Graph& g) {
    std::ostringstream ss;
    ss << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        ss << "  " << v + 1;
        if (!g.label(v).empty()) ss << " [label=\"" << dot_escape(g.label(v)) << "\"]";
        ss << ";\n";
    }
    for (Edge e : g.edges()) ss << "  " << e.u + 1 << " -- " << e.v + 1 << ";\n";
    ss << "}\n";
    return ss.str();
}

Graph parse_dot(std::string_view text) {
    static const std::regex header(R"re(^\s*(strict\s+)?graph\s*\w*\s*\{\s*$)re");
    static const std::regex node(R"re(^\s*(\d+)\s*(\[\s*label\s*=\s*"((?:[^"\\]|\\.)*)"\s*\])?\s*;?\s*$)re");
    static const std::regex edge(R"re(^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$)re");
    static const std::regex close(R"re(^\s*\}\s*$)re");

    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, std::string>> labels;
    int max_id = 0;
    bool opened = false, closed = false;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::smatch m;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (closed) throw ParseError("content after closing brace", line_no);
        if (!opened) {
            if (!std::regex_match(line, header)) throw ParseError("expected 'graph {' header", line_no);
            opened = true;
        } else if (std::regex_match(line, m, edge)) {
            int a = std::stoi(m[1]), b = std::stoi(m[2]);
            if (a < 1 || b < 1) throw ParseError("node ids are 1-based", line_no);
            edges.emplace_back(a, b);
            max_id = std::max({max_id, a, b});
        } else if (std::regex_match(line, m, node)) {
            int v = std::stoi(m[1]);
            if (v < 1) throw ParseError("node ids are 1-based", line_no);
            max_id = std::max(max_id, v);
            if (m[3].matched) {
                std::string raw = m[3], label;
                for (std::size_t i = 0; i < raw.size(); ++i) {
                    if (raw[i] == '\\' && i + 1 < raw.size()) ++i;
                    label.push_back(raw[i]);
                }
                labels.emplace_back(v, std::move(label));
            }
        } else if (std::regex_match(line, close)) {
            closed = true;
        } else {
            throw ParseError("unsupported DOT statement", line_no);
        }
    }
    if (!closed) throw ParseError("missing closing brace");
    GraphBuilder b(max_id);
    for (auto [a, c] : edges) {
        if (a == c) throw ParseError("self-loop in DOT input");
        b.add_edge(a - 1, c - 1);
    }
    for (auto& [v, label] : labels) b.set_label(v - 1, label);
    return b.build();
}

// ---------------------------------------------------------------- files

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return slurp(in);
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PreconditionError("cannot write '" + path + "'");
    out << content;
    if (!out) throw PreconditionError("write to '" + path + "' failed");
}

Graph load_graph_file(const std::string& path) {
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return graph_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("graph JSON: ") + e.what());
        }
    }
    return parse_graph_text(text);
}

LinearLayout load_layout_file(const std::string& path) {
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        try {
            return layout_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("layout JSON: ") + e.what());
        }
    }
    return parse_layout_text(text);
}

std::string fnv1a_hex(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << h;
    return ss.str();
}

}  // namespace ctw
