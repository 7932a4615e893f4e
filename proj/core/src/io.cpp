#include "locham/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace locham {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok)
            tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#')
            continue;
        lines.push_back({number, std::move(tokens)});
    }
    return lines;
}

long long parse_int(const std::string& tok, int line) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'", line);
    }
    if (used != tok.size())
        throw ParseError("expected an integer, got '" + tok + "'", line);
    return value;
}

int parse_vertex(const std::string& tok, int n, int line) {
    long long v = parse_int(tok, line);
    if (v < 1 || v > n)
        throw ParseError("vertex " + tok + " outside 1.." + std::to_string(n), line);
    return static_cast<int>(v);
}

} // namespace

Graph parse_graph(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError("empty graph document");
    const Line& header = lines[0];
    if (header.tokens[0] != "graph" || header.tokens.size() != 2)
        throw ParseError("expected header 'graph <n>'", header.number);
    long long n = parse_int(header.tokens[1], header.number);
    if (n < 0)
        throw ParseError("vertex count must be nonnegative", header.number);

    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, std::string>> labels;
    std::vector<char> labeled(n + 1, 0);
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto& t = line.tokens;
        if (t[0] == "e") {
            if (t.size() != 3)
                throw ParseError("expected 'e <u> <v>'", line.number);
            int u = parse_vertex(t[1], static_cast<int>(n), line.number);
            int v = parse_vertex(t[2], static_cast<int>(n), line.number);
            if (u == v)
                throw ParseError("self-loop at vertex " + t[1], line.number);
            auto e = std::minmax(u, v);
            if (!seen.insert(e).second)
                throw ParseError("duplicate edge " + std::to_string(e.first) + " " +
                                 std::to_string(e.second), line.number);
            edges.push_back(e);
        } else if (t[0] == "label") {
            if (t.size() < 3)
                throw ParseError("expected 'label <v> <text>'", line.number);
            int v = parse_vertex(t[1], static_cast<int>(n), line.number);
            if (labeled[v])
                throw ParseError("duplicate label for vertex " + t[1], line.number);
            labeled[v] = 1;
            std::string joined = t[2];
            for (std::size_t k = 3; k < t.size(); ++k)
                joined += " " + t[k];
            labels.emplace_back(v, std::move(joined));
        } else {
            throw ParseError("unknown directive '" + t[0] + "'", line.number);
        }
    }

    Graph g(static_cast<int>(n), edges);
    for (auto& [v, text_label] : labels)
        g.set_label(v, std::move(text_label));
    return g;
}

std::string write_graph(const Graph& g) {
    std::string out = "graph " + std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    if (g.has_labels())
        for (int v = 1; v <= g.vertex_count(); ++v)
            if (!g.label(v).empty())
                out += "label " + std::to_string(v) + " " + g.label(v) + "\n";
    return out;
}

TreeDecomposition parse_td(const std::string& text, const Graph& g) {
    auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError("empty decomposition document");
    const Line& header = lines[0];
    if (header.tokens[0] != "td" || header.tokens.size() != 3)
        throw ParseError("expected header 'td <numNodes> <forGraphN>'", header.number);
    long long num_nodes = parse_int(header.tokens[1], header.number);
    long long for_n = parse_int(header.tokens[2], header.number);
    if (num_nodes < 0 || for_n < 0)
        throw ParseError("counts must be nonnegative", header.number);

    TreeDecomposition td;
    td.graph_n = static_cast<int>(for_n);
    td.bags.assign(num_nodes, {});
    std::vector<char> have_bag(num_nodes + 1, 0);

    auto parse_node_id = [&](const std::string& tok, int line) {
        long long id = parse_int(tok, line);
        if (id < 1 || id > num_nodes)
            throw ParseError("node id " + tok + " outside 1.." + std::to_string(num_nodes), line);
        return static_cast<int>(id);
    };

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto& t = line.tokens;
        if (t[0] == "bag") {
            if (t.size() < 2)
                throw ParseError("expected 'bag <id> <v...>'", line.number);
            int id = parse_node_id(t[1], line.number);
            if (have_bag[id])
                throw ParseError("duplicate bag " + t[1], line.number);
            have_bag[id] = 1;
            std::vector<int> bag;
            for (std::size_t k = 2; k < t.size(); ++k)
                bag.push_back(parse_vertex(t[k], td.graph_n, line.number));
            std::sort(bag.begin(), bag.end());
            if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
                throw ParseError("repeated vertex in bag " + t[1], line.number);
            td.bags[id - 1] = std::move(bag);
        } else if (t[0] == "link") {
            if (t.size() != 3)
                throw ParseError("expected 'link <a> <b>'", line.number);
            int a = parse_node_id(t[1], line.number);
            int b = parse_node_id(t[2], line.number);
            td.tree_edges.emplace_back(a - 1, b - 1);
        } else if (t[0] == "root") {
            if (t.size() != 2)
                throw ParseError("expected 'root <id>'", line.number);
            td.root = parse_node_id(t[1], line.number) - 1;
        } else if (t[0] == "path") {
            if (t.size() != 1)
                throw ParseError("unexpected tokens after 'path'", line.number);
            td.is_path = true;
        } else {
            throw ParseError("unknown directive '" + t[0] + "'", line.number);
        }
    }

    for (long long id = 1; id <= num_nodes; ++id)
        if (!have_bag[id])
            throw ParseError("bag " + std::to_string(id) + " missing");

    auto bad = validate(g, td);
    if (!bad.empty()) {
        std::string msg = "decomposition invalid:";
        for (const auto& v : bad)
            msg += "\n  " + v;
        throw ValidationError(msg);
    }
    return td;
}

std::string write_td(const TreeDecomposition& td) {
    std::string out = "td " + std::to_string(td.bags.size()) + " " + std::to_string(td.graph_n) + "\n";
    if (td.is_path)
        out += "path\n";
    if (td.root >= 0)
        out += "root " + std::to_string(td.root + 1) + "\n";
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out += "bag " + std::to_string(i + 1);
        for (int v : td.bags[i])
            out += " " + std::to_string(v);
        out += "\n";
    }
    std::vector<std::pair<int, int>> links;
    for (auto [a, b] : td.tree_edges)
        links.push_back(std::minmax(a, b));
    std::sort(links.begin(), links.end());
    for (auto [a, b] : links)
        out += "link " + std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    return out;
}

VertexMap parse_witness(const std::string& text, const Graph& guest, const Graph& host) {
    std::vector<int> image(guest.vertex_count() + 1, 0);
    for (const Line& line : tokenize(text)) {
        const auto& t = line.tokens;
        if (t[0] != "map" || t.size() != 3)
            throw ParseError("expected 'map <u> <p>'", line.number);
        int u = parse_vertex(t[1], guest.vertex_count(), line.number);
        int p = parse_vertex(t[2], host.vertex_count(), line.number);
        if (image[u] != 0)
            throw ParseError("duplicate assignment for vertex " + t[1], line.number);
        image[u] = p;
    }
    for (int v = 1; v <= guest.vertex_count(); ++v)
        if (image[v] == 0)
            throw ParseError("vertex " + std::to_string(v) + " has no assignment");
    return VertexMap{&guest, &host, std::move(image)};
}

std::string write_witness(const VertexMap& f) {
    std::string out;
    for (int v = 1; v <= f.guest->vertex_count(); ++v)
        out += "map " + std::to_string(v) + " " + std::to_string(f.image[v]) + "\n";
    return out;
}

namespace {

ThreePartitionInstance instance_from_fields(const std::string& b_tok, const std::string& m_tok,
                                            const std::string& a_tok, int line) {
    ThreePartitionInstance inst;
    inst.target_sum = parse_int(b_tok, line);
    long long m = parse_int(m_tok, line);
    if (m < 1 || m > 1000000)
        throw ParseError("group count m out of range", line);
    inst.group_count = static_cast<int>(m);
    std::string item;
    std::istringstream as(a_tok);
    while (std::getline(as, item, ','))
        inst.elements.push_back(parse_int(item, line));
    inst.validate();
    return inst;
}

std::string strip_prefix(const std::string& tok, const std::string& prefix, int line) {
    if (tok.rfind(prefix, 0) != 0)
        throw ParseError("expected '" + prefix + "...', got '" + tok + "'", line);
    return tok.substr(prefix.size());
}

} // namespace

ThreePartitionInstance parse_instance(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError("empty instance document");
    const Line& line = lines[0];
    const auto& t = line.tokens;
    if (t[0] != "instance" || t.size() != 4)
        throw ParseError("expected 'instance b=<b> m=<m> A=<a1>,<a2>,...'", line.number);
    if (lines.size() > 1)
        throw ParseError("unexpected extra line", lines[1].number);
    return instance_from_fields(strip_prefix(t[1], "b=", line.number),
                                strip_prefix(t[2], "m=", line.number),
                                strip_prefix(t[3], "A=", line.number), line.number);
}

std::string write_instance(const ThreePartitionInstance& inst) {
    std::string out = "instance b=" + std::to_string(inst.target_sum) +
                      " m=" + std::to_string(inst.group_count) + " A=";
    for (std::size_t i = 0; i < inst.elements.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(inst.elements[i]);
    }
    out += "\n";
    return out;
}

ThreePartitionInstance parse_instance_cli(const std::string& text) {
    std::vector<std::string> fields;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ';'))
        fields.push_back(item);
    if (fields.size() != 3)
        throw ParseError("expected 'b=<b>;m=<m>;A=<a1>,<a2>,...'");
    return instance_from_fields(strip_prefix(fields[0], "b=", 0), strip_prefix(fields[1], "m=", 0),
                                strip_prefix(fields[2], "A=", 0), 0);
}

} // namespace locham
