#include "hgd/io.hpp"

#include <fstream>
#include <sstream>

namespace hgd {

namespace {

bool ident_char(char c)
{
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
            c == '_' || c == ':' || c == '-';
}

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string & what)
{
    throw Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
            ": " + what);
}

} // namespace

Hypergraph parse_hypergraph(const std::string & text)
{
    std::vector<std::pair<std::string, std::vector<std::string>>> spec;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (! raw.empty() && raw.back() == '\r')
            raw.pop_back(); // CRLF normalization
        std::string_view line(raw);
        auto comment = line.find('%');
        if (comment != std::string_view::npos)
            line = line.substr(0, comment);
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
                ++pos;
        };
        skip_ws();
        if (pos == line.size())
            continue;

        auto read_ident = [&](const char * what) {
            std::size_t start = pos;
            while (pos < line.size() && ident_char(line[pos]))
                ++pos;
            if (pos == start)
                parse_fail(lineno, pos + 1, std::string("expected ") + what);
            return std::string(line.substr(start, pos - start));
        };

        std::string id = read_ident("edge identifier");
        skip_ws();
        if (pos >= line.size() || line[pos] != '(')
            parse_fail(lineno, pos + 1, "expected '('");
        ++pos;
        std::vector<std::string> verts;
        skip_ws();
        if (pos < line.size() && line[pos] == ')') {
            ++pos; // empty vertex list; rejected by the builder with the edge id
        }
        else {
            while (true) {
                skip_ws();
                verts.push_back(read_ident("vertex identifier"));
                skip_ws();
                if (pos < line.size() && line[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (pos < line.size() && line[pos] == ')') {
                    ++pos;
                    break;
                }
                parse_fail(lineno, pos + 1, "expected ',' or ')'");
            }
        }
        skip_ws();
        if (pos >= line.size() || line[pos] != '.')
            parse_fail(lineno, pos + 1, "expected trailing '.'");
        ++pos;
        skip_ws();
        if (pos != line.size())
            parse_fail(lineno, pos + 1, "unexpected trailing characters");
        spec.emplace_back(std::move(id), std::move(verts));
    }
    return Hypergraph::build(spec);
}

Hypergraph read_hypergraph_file(const std::string & path)
{
    return parse_hypergraph(read_text_file(path));
}

std::string write_hypergraph(const Hypergraph & h)
{
    std::ostringstream out;
    for (const auto & e : h.edges()) {
        out << e.id << "(";
        bool sep = false;
        e.vertices.for_each([&](std::size_t v) {
            if (sep)
                out << ",";
            out << h.vertex_name(v);
            sep = true;
        });
        out << ").\n";
    }
    return out.str();
}

namespace {

std::vector<std::string> tokenize(const std::string & line)
{
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string t;
    while (in >> t)
        tokens.push_back(t);
    return tokens;
}

// "{a,b,c}" -> list of names; "{}" -> empty
std::vector<std::string> parse_brace_list(const std::string & token, std::size_t lineno)
{
    if (token.size() < 2 || token.front() != '{' || token.back() != '}')
        parse_fail(lineno, 1, "expected {...}");
    std::vector<std::string> out;
    std::string body = token.substr(1, token.size() - 2);
    if (body.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        auto comma = body.find(',', start);
        out.push_back(body.substr(start, comma - start));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace

DecompositionFile parse_decomposition(const std::string & text, const Hypergraph & h)
{
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    std::vector<std::string> lines;
    while (std::getline(in, raw)) {
        if (! raw.empty() && raw.back() == '\r')
            raw.pop_back();
        auto comment = raw.find('%');
        if (comment != std::string::npos)
            raw = raw.substr(0, comment);
        lines.push_back(raw);
    }

    std::size_t cur = 0;
    auto next_content = [&]() -> std::optional<std::vector<std::string>> {
        while (cur < lines.size()) {
            ++lineno;
            auto tokens = tokenize(lines[cur++]);
            if (! tokens.empty())
                return tokens;
        }
        return std::nullopt;
    };

    auto header = next_content();
    if (! header.has_value() || header->size() != 2 || (*header)[0] != "hgd")
        throw Error("missing format header");
    if ((*header)[1] != "1")
        throw Error("format version mismatch: expected 1, found " + (*header)[1]);

    auto kind_line = next_content();
    if (! kind_line.has_value() || kind_line->size() != 4 || (*kind_line)[0] != "kind" ||
            (*kind_line)[2] != "width")
        throw Error("missing kind/width header");

    DecompositionFile out;
    if ((*kind_line)[1] == "HD")
        out.tree.kind = DecompKind::HD;
    else if ((*kind_line)[1] == "GHD")
        out.tree.kind = DecompKind::GHD;
    else if ((*kind_line)[1] == "FHD")
        out.tree.kind = DecompKind::FHD;
    else
        throw Error("unknown decomposition kind " + (*kind_line)[1]);

    auto declared_width = Rational::parse((*kind_line)[3]);
    if (! declared_width.has_value())
        throw Error("malformed width " + (*kind_line)[3]);

    std::vector<std::optional<std::size_t>> parents;
    while (auto tokens = next_content()) {
        if (tokens->size() != 8 || (*tokens)[0] != "node" || (*tokens)[2] != "parent" ||
                (*tokens)[4] != "bag" || (*tokens)[6] != "cover")
            parse_fail(lineno, 1, "malformed node record");
        std::size_t id = std::stoul((*tokens)[1]);
        if (id != out.tree.nodes.size())
            parse_fail(lineno, 1, "node ids must be consecutive from 0");

        std::optional<std::size_t> parent;
        if ((*tokens)[3] != "-")
            parent = std::stoul((*tokens)[3]);

        VertexSet bag(h.vertex_count());
        for (const auto & name : parse_brace_list((*tokens)[5], lineno)) {
            auto v = h.vertex_index(name);
            if (! v.has_value())
                parse_fail(lineno, 1, "unknown vertex " + name);
            bag.add(*v);
        }

        std::vector<std::pair<std::size_t, Rational>> entries;
        for (const auto & item : parse_brace_list((*tokens)[7], lineno)) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                parse_fail(lineno, 1, "cover entry needs edge=weight");
            auto e = h.edge_index(item.substr(0, eq));
            if (! e.has_value())
                parse_fail(lineno, 1, "unknown edge " + item.substr(0, eq));
            auto w = Rational::parse(item.substr(eq + 1));
            if (! w.has_value())
                parse_fail(lineno, 1, "malformed weight in " + item);
            entries.emplace_back(*e, *w);
        }
        EdgeWeighting cover = EdgeWeighting::fractional(std::move(entries));
        if (out.tree.kind != DecompKind::FHD) {
            if (! cover.is_integral_values())
                parse_fail(lineno, 1, "fractional weight under integral kind");
            cover.set_kind(WeightKind::Integral);
        }
        parents.push_back(parent);
        out.tree.nodes.push_back(DecompNode{VertexSet::npos, {}, std::move(bag), std::move(cover)});
    }

    if (out.tree.nodes.empty())
        throw Error("decomposition file has no nodes");

    std::size_t roots = 0;
    for (std::size_t u = 0; u < parents.size(); ++u) {
        if (! parents[u].has_value()) {
            out.tree.root = u;
            ++roots;
        }
        else {
            if (*parents[u] >= out.tree.nodes.size())
                throw Error("node parent out of range");
            out.tree.nodes[u].parent = *parents[u];
            out.tree.nodes[*parents[u]].children.push_back(u);
        }
    }
    if (roots != 1)
        throw Error("decomposition must have exactly one root");

    if (width(out.tree) != *declared_width)
        out.warnings.push_back("width header " + declared_width->str_canonical() +
                " differs from recomputed width " + width(out.tree).str_canonical());
    return out;
}

DecompositionFile read_decomposition_file(const std::string & path, const Hypergraph & h)
{
    return parse_decomposition(read_text_file(path), h);
}

std::string write_decomposition(const Hypergraph & h, const DecompositionTree & d)
{
    auto order = d.preorder();
    std::vector<std::size_t> new_id(d.nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        new_id[order[i]] = i;

    std::ostringstream out;
    out << "hgd 1\n";
    out << "kind " << kind_name(d.kind) << " width " << width(d).str_canonical() << "\n";
    for (std::size_t u : order) {
        const auto & n = d.nodes[u];
        out << "node " << new_id[u] << " parent ";
        if (n.parent == VertexSet::npos)
            out << "-";
        else
            out << new_id[n.parent];
        out << " bag {";
        bool sep = false;
        n.bag.for_each([&](std::size_t v) {
            if (sep)
                out << ",";
            out << h.vertex_name(v);
            sep = true;
        });
        out << "} cover {";
        sep = false;
        for (const auto & [e, w] : n.cover.entries()) {
            if (sep)
                out << ",";
            out << h.edge(e).id << "=" << w.str_canonical();
            sep = true;
        }
        out << "}\n";
    }
    return out.str();
}

std::string read_text_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string & path, const std::string & text)
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw Error("cannot write " + path);
    out << text;
}

} // namespace hgd
