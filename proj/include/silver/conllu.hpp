#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "silver/corpus.hpp"
#include "silver/errors.hpp"
#include "silver/util.hpp"

namespace silver {

namespace detail {

inline bool is_range_or_empty_node_id(std::string_view id) {
  // Multiword ranges look like "3-4", empty nodes like "3.1". Both carry
  // no syntactic word of their own and are skipped.
  return id.find('-') != std::string_view::npos ||
         id.find('.') != std::string_view::npos;
}

inline std::optional<std::string> opt_field(const std::string& field) {
  if (field == "_" || field.empty()) return std::nullopt;
  return field;
}

}  // namespace detail

// CoNLL-U reader. Conversion at the boundary: the 1-based HEAD column
// becomes 0-based, HEAD=0 becomes kRootHead. Range and empty-node lines
// are skipped; `# sent_id = ...` comments become sentence ids.
inline std::vector<AnnotatedSentence> read_conllu(std::istream& in) {
  std::vector<AnnotatedSentence> sentences;
  AnnotatedSentence current;
  std::vector<int> raw_heads;  // 1-based as read, resolved per block
  std::vector<size_t> head_lines;
  size_t line_no = 0;
  size_t block_no = 0;
  bool in_block = false;

  auto flush = [&] {
    if (!in_block) return;
    ++block_no;
    if (current.id.empty()) current.id = std::to_string(block_no);
    for (size_t k = 0; k < raw_heads.size(); ++k) {
      int h = raw_heads[k];
      if (h < 0) continue;  // HEAD was "_"
      if (h == 0) {
        current.tokens[k].head = kRootHead;
      } else if (h > current.size()) {
        throw ValidationError("sentence " + current.id + ": HEAD " + std::to_string(h) +
                              " out of range for " + std::to_string(current.size()) +
                              " tokens (line " + std::to_string(head_lines[k]) + ")");
      } else {
        current.tokens[k].head = h - 1;
      }
    }
    validate_sentence(current);
    sentences.push_back(std::move(current));
    current = {};
    raw_heads.clear();
    head_lines.clear();
    in_block = false;
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim_cr(raw);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') {
      std::string_view rest = line.substr(1);
      size_t eq = rest.find('=');
      if (eq != std::string_view::npos) {
        auto key = split_ws(rest.substr(0, eq));
        if (key.size() == 1 && key[0] == "sent_id") {
          auto value = split_ws(rest.substr(eq + 1));
          if (value.size() == 1) current.id = value[0];
        }
      }
      in_block = true;
      continue;
    }
    std::vector<std::string> cols = line.find('\t') != std::string_view::npos
                                        ? split_tab(line)
                                        : split_ws(line);
    if (cols.size() != 10)
      throw ParseError("expected 10 columns, got " + std::to_string(cols.size()),
                       line_no);
    in_block = true;
    if (detail::is_range_or_empty_node_id(cols[0])) continue;
    int id = parse_index(cols[0], line_no);
    if (id != current.size() + 1)
      throw ParseError("token id " + std::to_string(id) + " does not follow " +
                       std::to_string(current.size()) + " tokens", line_no);
    Token tok;
    tok.index = current.size();
    tok.form = cols[1];
    tok.upos = detail::opt_field(cols[3]);
    tok.deprel = detail::opt_field(cols[7]);
    if (cols[6] == "_" || cols[6].empty()) {
      raw_heads.push_back(-1);
    } else {
      raw_heads.push_back(parse_index(cols[6], line_no));
    }
    head_lines.push_back(line_no);
    current.tokens.push_back(std::move(tok));
  }
  flush();
  return sentences;
}

inline std::vector<AnnotatedSentence> read_conllu(const std::string& text) {
  std::istringstream in(text);
  return read_conllu(in);
}

// Writer precondition: upos, head and deprel present on every token.
inline void write_conllu(const std::vector<AnnotatedSentence>& sentences,
                         std::ostream& out) {
  for (const AnnotatedSentence& s : sentences) {
    for (const Token& t : s.tokens) {
      if (!t.upos)
        throw ValidationError("sentence " + s.id + ": token " +
                              std::to_string(t.index + 1) + " missing upos");
      if (!t.head)
        throw ValidationError("sentence " + s.id + ": token " +
                              std::to_string(t.index + 1) + " missing head");
      if (!t.deprel)
        throw ValidationError("sentence " + s.id + ": token " +
                              std::to_string(t.index + 1) + " missing deprel");
    }
    out << "# sent_id = " << s.id << "\n";
    for (const Token& t : s.tokens) {
      int head = *t.head == kRootHead ? 0 : *t.head + 1;
      out << t.index + 1 << '\t' << t.form << "\t_\t" << *t.upos << "\t_\t_\t"
          << head << '\t' << *t.deprel << "\t_\t_\n";
    }
    out << "\n";
  }
}

inline std::string write_conllu(const std::vector<AnnotatedSentence>& sentences) {
  std::ostringstream out;
  write_conllu(sentences, out);
  return out.str();
}

}  // namespace silver
