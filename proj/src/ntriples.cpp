#include "gsum/ntriples.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>

namespace gsum {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t'; }

struct LineParser {
    const std::string& line;
    std::size_t pos = 0;
    std::size_t line_number;

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(line_number, message);
    }

    void skip_ws() {
        while (pos < line.size() && is_ws(line[pos])) pos++;
    }

    bool at_end() const { return pos >= line.size(); }
    char peek() const { return line[pos]; }

    void expect(char c, const char* what) {
        if (at_end() || line[pos] != c) fail(std::string("expected ") + what);
        pos++;
    }

    void append_utf8(std::string& out, std::uint32_t cp) {
        if (cp < 0x80) {
            out += char(cp);
        } else if (cp < 0x800) {
            out += char(0xC0 | (cp >> 6));
            out += char(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            out += char(0xE0 | (cp >> 12));
            out += char(0x80 | ((cp >> 6) & 0x3F));
            out += char(0x80 | (cp & 0x3F));
        } else {
            out += char(0xF0 | (cp >> 18));
            out += char(0x80 | ((cp >> 12) & 0x3F));
            out += char(0x80 | ((cp >> 6) & 0x3F));
            out += char(0x80 | (cp & 0x3F));
        }
    }

    std::uint32_t hex_escape(std::size_t digits) {
        std::uint32_t cp = 0;
        for (std::size_t i = 0; i < digits; i++) {
            if (at_end()) fail("truncated \\u escape");
            char c = line[pos++];
            cp <<= 4;
            if (c >= '0' && c <= '9') cp |= std::uint32_t(c - '0');
            else if (c >= 'a' && c <= 'f') cp |= std::uint32_t(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') cp |= std::uint32_t(c - 'A' + 10);
            else fail("invalid hex digit in escape");
        }
        return cp;
    }

    std::string parse_iriref() {
        expect('<', "'<'");
        std::string out;
        while (true) {
            if (at_end()) fail("unterminated IRI");
            char c = line[pos++];
            if (c == '>') break;
            if (c == '<' || c == '"' || c == ' ') fail("invalid character in IRI");
            if (c == '\\') {
                if (at_end()) fail("truncated escape in IRI");
                char e = line[pos++];
                if (e == 'u') append_utf8(out, hex_escape(4));
                else if (e == 'U') append_utf8(out, hex_escape(8));
                else fail("invalid escape in IRI");
            } else {
                out += c;
            }
        }
        if (out.empty()) fail("empty IRI");
        return out;
    }

    std::string parse_blank() {
        if (pos + 1 >= line.size() || line[pos] != '_' || line[pos + 1] != ':')
            fail("expected blank node");
        pos += 2;
        std::string out = "_:";
        while (!at_end() && !is_ws(line[pos]) && line[pos] != '.') out += line[pos++];
        if (out.size() == 2) fail("empty blank node label");
        return out;
    }

    // Returns the canonical quoted form: "lexical" with minimal escaping,
    // followed by @lang or ^^<datatype> when present.
    std::string parse_literal() {
        expect('"', "'\"'");
        std::string lexical;
        while (true) {
            if (at_end()) fail("unterminated literal");
            char c = line[pos++];
            if (c == '"') break;
            if (c == '\\') {
                if (at_end()) fail("unterminated literal");
                char e = line[pos++];
                switch (e) {
                    case 't': lexical += '\t'; break;
                    case 'b': lexical += '\b'; break;
                    case 'n': lexical += '\n'; break;
                    case 'r': lexical += '\r'; break;
                    case 'f': lexical += '\f'; break;
                    case '"': lexical += '"'; break;
                    case '\'': lexical += '\''; break;
                    case '\\': lexical += '\\'; break;
                    case 'u': append_utf8(lexical, hex_escape(4)); break;
                    case 'U': append_utf8(lexical, hex_escape(8)); break;
                    default: fail("invalid escape in literal");
                }
            } else {
                lexical += c;
            }
        }
        std::string out = "\"";
        for (char c : lexical) {
            switch (c) {
                case '\\': out += "\\\\"; break;
                case '"': out += "\\\""; break;
                case '\n': out += "\\n"; break;
                case '\r': out += "\\r"; break;
                case '\t': out += "\\t"; break;
                default: out += c;
            }
        }
        out += '"';
        if (!at_end() && peek() == '@') {
            pos++;
            std::string tag;
            while (!at_end() && (std::isalnum((unsigned char)peek()) || peek() == '-')) tag += line[pos++];
            if (tag.empty()) fail("empty language tag");
            out += '@';
            out += tag;
        } else if (pos + 1 < line.size() && line[pos] == '^' && line[pos + 1] == '^') {
            pos += 2;
            out += "^^<" + parse_iriref() + ">";
        }
        return out;
    }
};

void parse_line(const std::string& line, std::size_t line_number, GraphBuilder& builder) {
    LineParser p{line, 0, line_number};
    p.skip_ws();
    if (p.at_end() || p.peek() == '#') return;

    std::string subject;
    TermKind subject_kind;
    if (p.peek() == '<') {
        subject = p.parse_iriref();
        subject_kind = TermKind::Iri;
    } else if (p.peek() == '_') {
        subject = p.parse_blank();
        subject_kind = TermKind::Blank;
    } else {
        p.fail("expected IRI or blank node as subject");
    }

    p.skip_ws();
    std::string predicate = p.parse_iriref();

    p.skip_ws();
    if (p.at_end()) p.fail("missing object");
    std::string object;
    TermKind object_kind;
    if (p.peek() == '<') {
        object = p.parse_iriref();
        object_kind = TermKind::Iri;
    } else if (p.peek() == '_') {
        object = p.parse_blank();
        object_kind = TermKind::Blank;
    } else if (p.peek() == '"') {
        object = p.parse_literal();
        object_kind = TermKind::Literal;
    } else {
        p.fail("expected IRI, blank node, or literal as object");
    }

    p.skip_ws();
    p.expect('.', "'.' at end of statement");
    p.skip_ws();
    if (!p.at_end() && p.peek() != '#') p.fail("unexpected trailing content");

    builder.add_triple(subject, subject_kind, predicate, object, object_kind);
}

LabeledGraph parse_with(const std::function<bool(std::string&)>& next_line,
                        const IngestionConfig& config) {
    GraphBuilder builder(config);
    std::string line;
    std::size_t line_number = 0;
    while (next_line(line)) {
        line_number++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        parse_line(line, line_number, builder);
    }
    return builder.finish();
}

bool has_gz_suffix(const std::string& path) {
    return path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0;
}

std::string render_label(const std::string& name) {
    if (!name.empty() && (name.front() == '"' || name.compare(0, 2, "_:") == 0))
        return name;
    return "<" + name + ">";
}

}  // namespace

LabeledGraph parse_ntriples(std::istream& input, const IngestionConfig& config) {
    return parse_with([&](std::string& line) { return bool(std::getline(input, line)); }, config);
}

LabeledGraph parse_ntriples_string(const std::string& text, const IngestionConfig& config) {
    std::istringstream in(text);
    return parse_ntriples(in, config);
}

LabeledGraph parse_ntriples_file(const std::string& path, const IngestionConfig& config) {
    if (has_gz_suffix(path)) {
        gzFile gz = gzopen(path.c_str(), "rb");
        if (!gz) throw IngestError("cannot open '" + path + "'");
        std::string pending;
        char buf[1 << 16];
        auto next_line = [&](std::string& line) {
            line.clear();
            while (true) {
                auto nl = pending.find('\n');
                if (nl != std::string::npos) {
                    line = pending.substr(0, nl);
                    pending.erase(0, nl + 1);
                    return true;
                }
                int got = gzread(gz, buf, sizeof(buf));
                if (got < 0) throw IngestError("gzip read error in '" + path + "'");
                if (got == 0) {
                    if (pending.empty()) return false;
                    line.swap(pending);
                    pending.clear();
                    return true;
                }
                pending.append(buf, std::size_t(got));
            }
        };
        try {
            LabeledGraph g = parse_with(next_line, config);
            gzclose(gz);
            return g;
        } catch (...) {
            gzclose(gz);
            throw;
        }
    }
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open '" + path + "'");
    return parse_ntriples(in, config);
}

std::string write_ntriples(const LabeledGraph& g, const IngestionConfig& config) {
    std::string out;
    std::vector<std::string> names;
    for (VertexId v = 0; v < g.vertex_count(); v++) {
        std::string subject = g.display_term(v);
        names.clear();
        for (LabelId id : g.dict().vertex.set_members(g.vertex_label_set(v)))
            names.push_back(g.dict().vertex.label_name(id));
        std::sort(names.begin(), names.end());
        bool literal_label_skipped = false;
        for (const std::string& name : names) {
            // The literal label is re-added by ingestion; emitting it would
            // put a literal in subject position.
            if (g.term_kind(v) == TermKind::Literal && !literal_label_skipped &&
                name == config.literal_label) {
                literal_label_skipped = true;
                continue;
            }
            out += subject;
            out += " <";
            out += config.type_predicate;
            out += "> ";
            out += render_label(name);
            out += " .\n";
        }
    }
    for (const Edge& e : g.edges()) {
        names.clear();
        for (LabelId id : g.dict().edge.set_members(e.labels))
            names.push_back(g.dict().edge.label_name(id));
        std::sort(names.begin(), names.end());
        for (const std::string& name : names) {
            out += g.display_term(e.source);
            out += " <";
            out += name;
            out += "> ";
            out += g.display_term(e.target);
            out += " .\n";
        }
    }
    return out;
}

void write_ntriples_file(const LabeledGraph& g, const std::string& path,
                         const IngestionConfig& config) {
    std::string text = write_ntriples(g, config);
    if (has_gz_suffix(path)) {
        gzFile gz = gzopen(path.c_str(), "wb");
        if (!gz) throw IngestError("cannot open '" + path + "' for writing");
        if (gzwrite(gz, text.data(), unsigned(text.size())) != int(text.size())) {
            gzclose(gz);
            throw IngestError("gzip write error for '" + path + "'");
        }
        gzclose(gz);
        return;
    }
    std::ofstream outf(path, std::ios::binary);
    if (!outf) throw IngestError("cannot open '" + path + "' for writing");
    outf.write(text.data(), std::streamsize(text.size()));
}

}  // namespace gsum
