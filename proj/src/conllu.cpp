#include "headliner/conllu.hpp"

#include <istream>
#include <ostream>

#include <spdlog/spdlog.h>

#include "headliner/text.hpp"
#include "tsv.hpp"

namespace headliner::conllu {

std::optional<std::string> Token::misc_value(std::string_view key) const {
  if (misc.empty() || misc == "_") return std::nullopt;
  for (auto item : text::split(misc, '|')) {
    auto eq = item.find('=');
    if (eq != std::string_view::npos && item.substr(0, eq) == key) return std::string(item.substr(eq + 1));
  }
  return std::nullopt;
}

namespace {

std::string_view comment_value(std::string_view line, std::string_view key) {
  // "# key = value"
  auto body = text::trim(line.substr(1));
  if (body.substr(0, key.size()) != key) return {};
  body = text::trim(body.substr(key.size()));
  if (body.empty() || body.front() != '=') return {};
  return text::trim(body.substr(1));
}

}  // namespace

ReadStats read(std::istream &in, const std::function<void(Sentence &&)> &sink) {
  ReadStats stats;
  Sentence current;
  bool bad = false;
  bool any = false;
  std::size_t line_no = 0;
  std::size_t start_line = 1;

  auto flush = [&] {
    if (any) {
      for (const auto &t : current.tokens) {
        if (t.head < 0 || t.head > static_cast<int>(current.tokens.size())) bad = true;
      }
      if (bad || current.tokens.empty()) {
        spdlog::warn("conllu: malformed sentence starting at line {} ('{}') skipped", start_line, current.id);
        ++stats.malformed;
      } else {
        ++stats.sentences;
        sink(std::move(current));
      }
    }
    current = Sentence{};
    bad = false;
    any = false;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    text::chomp(line);
    if (text::trim(line).empty()) {
      flush();
      continue;
    }
    if (!any) start_line = line_no;
    any = true;
    if (line[0] == '#') {
      if (auto v = comment_value(line, "sent_id"); !v.empty()) current.id = std::string(v);
      else if (auto t = comment_value(line, "text"); !t.empty()) current.text = std::string(t);
      continue;
    }
    auto cols = text::split(line, '\t');
    if (cols.size() != 10) {
      bad = true;
      continue;
    }
    if (cols[0].find('-') != std::string_view::npos || cols[0].find('.') != std::string_view::npos) continue;
    auto id = text::parse_int(cols[0]);
    auto head = text::parse_int(cols[6]);
    if (!id || !head || *id != static_cast<long long>(current.tokens.size()) + 1) {
      bad = true;
      continue;
    }
    Token tok;
    tok.id = static_cast<int>(*id);
    tok.form = std::string(cols[1]);
    tok.lemma = std::string(cols[2]);
    tok.upos = std::string(cols[3]);
    tok.xpos = std::string(cols[4]);
    tok.feats = std::string(cols[5]);
    tok.head = static_cast<int>(*head);
    tok.deprel = std::string(cols[7]);
    tok.deps = std::string(cols[8]);
    tok.misc = std::string(cols[9]);
    if (tok.lemma.empty() || tok.xpos.empty() || tok.deprel.empty()) bad = true;
    current.tokens.push_back(std::move(tok));
  }
  flush();
  return stats;
}

ReadStats read_file(const std::filesystem::path &path, const std::function<void(Sentence &&)> &sink) {
  auto in = detail::open_input(path);
  return read(in, sink);
}

void write(std::ostream &out, const Sentence &s) {
  if (!s.id.empty()) out << "# sent_id = " << s.id << '\n';
  if (!s.text.empty()) out << "# text = " << s.text << '\n';
  for (const auto &t : s.tokens) {
    out << t.id << '\t' << t.form << '\t' << t.lemma << '\t' << (t.upos.empty() ? "_" : t.upos) << '\t' << t.xpos
        << '\t' << (t.feats.empty() ? "_" : t.feats) << '\t' << t.head << '\t' << t.deprel << '\t'
        << (t.deps.empty() ? "_" : t.deps) << '\t' << (t.misc.empty() ? "_" : t.misc) << '\n';
  }
  out << '\n';
}

}  // namespace headliner::conllu
