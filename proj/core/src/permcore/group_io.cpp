// Copyright 2026 The redspec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "redspec/permcore/group_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "redspec/error.hpp"

namespace redspec {

namespace {

std::size_t first_non_space(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Parses one permutation occupying text, which starts at the given 1-based
// column of the given line.
Permutation parse_at(std::string_view text, std::size_t degree, std::size_t line,
                     std::size_t column) {
  try {
    return Permutation::parse(text, degree);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    if (auto pos = msg.find(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError(msg, line, column + e.column() - 1);
  } catch (const InputError& e) {
    throw ParseError(e.what(), line, column);
  }
}

}  // namespace

GroupText parse_group_text(std::string_view text) {
  GroupText out;
  bool have_degree = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim_right(line);
    const std::size_t lead = first_non_space(line);
    if (lead == line.size()) {
      if (end == text.size()) break;
      continue;
    }
    std::string_view body = line.substr(lead);
    const std::size_t col = lead + 1;
    if (!have_degree) {
      if (body.substr(0, 6) != "degree") throw ParseError("expected 'degree N'", line_no, col);
      std::string_view num = body.substr(6);
      std::size_t off = first_non_space(num);
      num = num.substr(off);
      if (num.empty() || num.size() > 9 ||
          num.find_first_not_of("0123456789") != std::string_view::npos) {
        throw ParseError("degree must be a positive integer", line_no, col + 6 + off);
      }
      out.degree = std::stoul(std::string(num));
      if (out.degree == 0) throw ParseError("degree must be positive", line_no, col + 6 + off);
      have_degree = true;
    } else if (body.substr(0, 9) == "subgroup:") {
      std::vector<Permutation> gens;
      std::size_t pos = 9;
      while (pos <= body.size()) {
        std::size_t semi = body.find(';', pos);
        if (semi == std::string_view::npos) semi = body.size();
        std::string_view item = body.substr(pos, semi - pos);
        std::size_t off = first_non_space(item);
        item = trim_right(item.substr(off));
        if (!item.empty()) gens.push_back(parse_at(item, out.degree, line_no, col + pos + off));
        pos = semi + 1;
      }
      out.subgroups.push_back(std::move(gens));
    } else {
      if (!out.subgroups.empty())
        throw ParseError("generator after subgroup lines", line_no, col);
      out.generators.push_back(parse_at(body, out.degree, line_no, col));
    }
    if (end == text.size()) break;
  }
  if (!have_degree) throw ParseError("missing 'degree N' header", line_no == 0 ? 1 : line_no, 1);
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupText read_group_file(const std::string& path) {
  return parse_group_text(read_text_file(path));
}

std::string format_group_text(const GroupText& g) {
  std::string out = "degree " + std::to_string(g.degree) + "\n";
  for (const auto& x : g.generators) out += x.to_string() + "\n";
  for (const auto& sub : g.subgroups) {
    out += "subgroup:";
    for (std::size_t i = 0; i < sub.size(); ++i) out += (i ? "; " : " ") + sub[i].to_string();
    out += "\n";
  }
  return out;
}

}  // namespace redspec
