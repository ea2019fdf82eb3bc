#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "silver/corpus.hpp"
#include "silver/errors.hpp"
#include "silver/util.hpp"

namespace silver {

// JSON Lines, one event record per line:
//   {"id": "...", "tokens": [...],
//    "triggers": [{"start": 0, "end": 1, "label": "..."}],
//    "arguments": [{"start": 2, "end": 2, "role": "...", "trigger": 0}]}
inline std::vector<AnnotatedSentence> read_events(std::istream& in) {
  using nlohmann::json;
  std::vector<AnnotatedSentence> sentences;
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim_cr(raw);
    if (line.empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad JSON: ") + e.what(), line_no);
    }
    AnnotatedSentence s;
    EventStructure ev;
    try {
      s.id = record.at("id").get<std::string>();
      int index = 0;
      for (const auto& form : record.at("tokens")) {
        Token tok;
        tok.index = index++;
        tok.form = form.get<std::string>();
        s.tokens.push_back(std::move(tok));
      }
      for (const auto& trig : record.at("triggers")) {
        Span span;
        span.start = trig.at("start").get<int>();
        span.end = trig.at("end").get<int>();
        span.label = trig.at("label").get<std::string>();
        ev.triggers.push_back(std::move(span));
      }
      for (const auto& arg : record.at("arguments")) {
        Argument a;
        a.span.start = arg.at("start").get<int>();
        a.span.end = arg.at("end").get<int>();
        a.span.label = arg.at("role").get<std::string>();
        a.role = arg.at("role").get<std::string>();
        a.trigger = arg.at("trigger").get<int>();
        ev.arguments.push_back(std::move(a));
      }
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad event record: ") + e.what(), line_no);
    }
    s.events = std::move(ev);
    validate_sentence(s);
    sentences.push_back(std::move(s));
  }
  return sentences;
}

inline std::vector<AnnotatedSentence> read_events(const std::string& text) {
  std::istringstream in(text);
  return read_events(in);
}

inline void write_events(const std::vector<AnnotatedSentence>& sentences,
                         std::ostream& out) {
  using nlohmann::ordered_json;
  for (const AnnotatedSentence& s : sentences) {
    if (!s.events)
      throw ValidationError("sentence " + s.id + ": missing event structure");
    validate_sentence(s);
    ordered_json record;
    record["id"] = s.id;
    record["tokens"] = s.forms();
    record["triggers"] = ordered_json::array();
    for (const Span& trig : s.events->triggers)
      record["triggers"].push_back(
          {{"start", trig.start}, {"end", trig.end}, {"label", trig.label}});
    record["arguments"] = ordered_json::array();
    for (const Argument& arg : s.events->arguments)
      record["arguments"].push_back({{"start", arg.span.start},
                                     {"end", arg.span.end},
                                     {"role", arg.role},
                                     {"trigger", arg.trigger}});
    out << record.dump() << '\n';
  }
}

inline std::string write_events(const std::vector<AnnotatedSentence>& sentences) {
  std::ostringstream out;
  write_events(sentences, out);
  return out.str();
}

}  // namespace silver
