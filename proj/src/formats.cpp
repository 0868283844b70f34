#include "vknot/formats.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

namespace vknot {

namespace {

struct Token {
    std::string text;
    int line;
    int col;
};

struct Line {
    char kind;  // 'v', 'e', 'x', 'o'
    int id;
    std::vector<Token> rest;
    int line_no;
};

std::vector<Line> tokenize(std::istream& in, const char* allowed_kinds) {
    std::vector<Line> out;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            tokens.push_back({raw.substr(start, i - start), line_no, static_cast<int>(start) + 1});
        }
        if (tokens.empty()) continue;

        const Token& head = tokens.front();
        if (head.text.size() != 1 || !std::strchr(allowed_kinds, head.text[0])) {
            throw ParseError(head.line, head.col,
                             "expected a line starting with one of '" +
                                 std::string(allowed_kinds) + "', got '" + head.text + "'");
        }
        Line line{head.text[0], -1, {}, line_no};
        std::size_t body_start = 1;
        if (line.kind != 'o') {
            if (tokens.size() < 2) {
                throw ParseError(head.line, head.col, "missing id after '" + head.text + "'");
            }
            std::string id_tok = tokens[1].text;
            bool colon_attached = !id_tok.empty() && id_tok.back() == ':';
            if (colon_attached) id_tok.pop_back();
            std::size_t pos = 0;
            int id = 0;
            try {
                id = std::stoi(id_tok, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != id_tok.size() || id_tok.empty() || id < 0) {
                throw ParseError(tokens[1].line, tokens[1].col,
                                 "expected a non-negative id, got '" + tokens[1].text + "'");
            }
            line.id = id;
            body_start = 2;
            if (!colon_attached) {
                if (tokens.size() < 3 || tokens[2].text != ":") {
                    throw ParseError(tokens[1].line, tokens[1].col + 1,
                                     "expected ':' after the id");
                }
                body_start = 3;
            }
        }
        line.rest.assign(tokens.begin() + body_start, tokens.end());
        out.push_back(std::move(line));
    }
    return out;
}

int parse_int(const Token& t, const char* what) {
    std::size_t pos = 0;
    long value = 0;
    try {
        value = std::stol(t.text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != t.text.size() || t.text.empty()) {
        throw ParseError(t.line, t.col, std::string("expected ") + what + ", got '" + t.text + "'");
    }
    return static_cast<int>(value);
}

// Dense id check: every id 0..n-1 exactly once.
void check_dense(const std::vector<std::pair<int, int>>& id_lines, const char* what) {
    std::vector<int> line_of(id_lines.size(), -1);
    for (const auto& [id, line] : id_lines) {
        if (id >= static_cast<int>(id_lines.size())) {
            throw ParseError(line, 1,
                             std::string(what) + " id " + std::to_string(id) +
                                 " out of range; ids must be dense 0.." +
                                 std::to_string(id_lines.size() - 1));
        }
        if (line_of[id] != -1) {
            throw ParseError(line, 1,
                             std::string("duplicate ") + what + " id " + std::to_string(id) +
                                 " (first seen on line " + std::to_string(line_of[id]) + ")");
        }
        line_of[id] = line;
    }
}

}  // namespace

SignedCyclicGraph parse_graph(std::istream& in) {
    auto lines = tokenize(in, "ve");
    std::vector<std::pair<int, int>> vertex_ids, edge_ids;
    for (const auto& line : lines) {
        (line.kind == 'v' ? vertex_ids : edge_ids).emplace_back(line.id, line.line_no);
    }
    check_dense(vertex_ids, "vertex");
    check_dense(edge_ids, "edge");

    std::vector<std::vector<int>> rotations(vertex_ids.size());
    std::vector<SignedEdge> edges(edge_ids.size());
    for (const auto& line : lines) {
        if (line.kind == 'v') {
            auto& rot = rotations[line.id];
            for (const auto& tok : line.rest) rot.push_back(parse_int(tok, "a dart id"));
        } else {
            if (line.rest.size() != 3) {
                throw ParseError(line.line_no, 1,
                                 "edge line needs two dart ids and a sign (+ or -)");
            }
            SignedEdge e;
            e.dart_a = parse_int(line.rest[0], "a dart id");
            e.dart_b = parse_int(line.rest[1], "a dart id");
            const Token& sign = line.rest[2];
            if (sign.text == "+") {
                e.sign = +1;
            } else if (sign.text == "-") {
                e.sign = -1;
            } else {
                throw ParseError(sign.line, sign.col, "expected '+' or '-', got '" + sign.text + "'");
            }
            edges[line.id] = e;
        }
    }
    try {
        return SignedCyclicGraph(std::move(rotations), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, 1, std::string("invariant violation: ") + e.what());
    }
}

SignedCyclicGraph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

SignedCyclicGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(in);
}

std::string serialize_graph(const SignedCyclicGraph& g) {
    std::vector<std::vector<int>> rotations;
    int isolated = 0;
    for (const auto& rot : g.rotations()) {
        if (rot.empty()) {
            ++isolated;
            continue;
        }
        auto it = std::min_element(rot.begin(), rot.end());
        std::vector<int> turned(it, rot.end());
        turned.insert(turned.end(), rot.begin(), it);
        rotations.push_back(std::move(turned));
    }
    std::sort(rotations.begin(), rotations.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    std::vector<SignedEdge> edges;
    for (const auto& e : g.edges()) {
        edges.push_back({std::min(e.dart_a, e.dart_b), std::max(e.dart_a, e.dart_b), e.sign});
    }
    std::sort(edges.begin(), edges.end(),
              [](const SignedEdge& a, const SignedEdge& b) { return a.dart_a < b.dart_a; });

    std::ostringstream os;
    int vid = 0;
    for (const auto& rot : rotations) {
        os << "v " << vid++ << ":";
        for (int d : rot) os << ' ' << d;
        os << '\n';
    }
    for (int i = 0; i < isolated; ++i) os << "v " << vid++ << ":\n";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        os << "e " << i << ": " << edges[i].dart_a << ' ' << edges[i].dart_b << ' '
           << (edges[i].sign > 0 ? '+' : '-') << '\n';
    }
    return os.str();
}

VirtualDiagram parse_diagram(std::istream& in) {
    auto lines = tokenize(in, "xo");
    std::vector<std::pair<int, int>> crossing_ids;
    int free_loops = 0;
    bool saw_free_loops = false;
    for (const auto& line : lines) {
        if (line.kind == 'x') {
            crossing_ids.emplace_back(line.id, line.line_no);
        } else {
            if (saw_free_loops) {
                throw ParseError(line.line_no, 1, "duplicate 'o' line");
            }
            if (line.rest.size() != 1) {
                throw ParseError(line.line_no, 1, "'o' line needs exactly one count");
            }
            free_loops = parse_int(line.rest[0], "a free-loop count");
            if (free_loops < 0) {
                throw ParseError(line.rest[0].line, line.rest[0].col,
                                 "free-loop count must be non-negative");
            }
            saw_free_loops = true;
        }
    }
    check_dense(crossing_ids, "crossing");

    const int n = static_cast<int>(crossing_ids.size());
    std::map<int, std::vector<std::pair<int, Token>>> label_ports;
    for (const auto& line : lines) {
        if (line.kind != 'x') continue;
        if (line.rest.size() != 4) {
            throw ParseError(line.line_no, 1, "crossing line needs exactly four arc labels");
        }
        for (int slot = 0; slot < 4; ++slot) {
            int label = parse_int(line.rest[slot], "an arc label");
            label_ports[label].emplace_back(4 * line.id + slot, line.rest[slot]);
        }
    }
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(2 * n);
    for (const auto& [label, ports] : label_ports) {
        if (ports.size() != 2) {
            const Token& t = ports.front().second;
            throw ParseError(t.line, t.col,
                             "arc label " + std::to_string(label) + " appears " +
                                 std::to_string(ports.size()) + " times; expected exactly 2");
        }
        arcs.emplace_back(ports[0].first, ports[1].first);
    }
    try {
        return VirtualDiagram(n, arcs, free_loops);
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, 1, std::string("invariant violation: ") + e.what());
    }
}

VirtualDiagram parse_diagram_string(const std::string& text) {
    std::istringstream in(text);
    return parse_diagram(in);
}

VirtualDiagram parse_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_diagram(in);
}

std::string serialize_diagram(const VirtualDiagram& d) {
    VirtualDiagram canon = canonical(d);
    std::vector<int> label(canon.port_count(), -1);
    int next_label = 0;
    for (int p = 0; p < canon.port_count(); ++p) {
        if (label[p] != -1) continue;
        label[p] = label[canon.mate(p)] = next_label++;
    }
    std::ostringstream os;
    for (int c = 0; c < canon.crossing_count(); ++c) {
        os << "x " << c << ":";
        for (int slot = 0; slot < 4; ++slot) os << ' ' << label[4 * c + slot];
        os << '\n';
    }
    if (canon.free_loops() > 0) os << "o " << canon.free_loops() << '\n';
    return os.str();
}

std::string graph_to_json(const SignedCyclicGraph& g) {
    std::ostringstream os;
    os << "{\"vertices\":[";
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v) os << ',';
        os << '[';
        const auto& rot = g.rotation(v);
        for (std::size_t i = 0; i < rot.size(); ++i) {
            if (i) os << ',';
            os << rot[i];
        }
        os << ']';
    }
    os << "],\"edges\":[";
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e) os << ',';
        const auto& ed = g.edge(e);
        os << "{\"darts\":[" << ed.dart_a << ',' << ed.dart_b << "],\"sign\":" << ed.sign << '}';
    }
    os << "]}";
    return os.str();
}

std::string diagram_to_json(const VirtualDiagram& d) {
    VirtualDiagram canon = canonical(d);
    std::ostringstream os;
    os << "{\"crossings\":" << canon.crossing_count() << ",\"arcs\":[";
    auto arcs = canon.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (i) os << ',';
        os << '[' << arcs[i].first << ',' << arcs[i].second << ']';
    }
    os << "],\"free_loops\":" << canon.free_loops() << '}';
    return os.str();
}

}  // namespace vknot
