/*
Copyright 2026 The metricdim Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

// graph6, short form only (n <= 62). Header byte 63 + n, then the upper
// triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed six
// bits per byte, most significant first, zero padded, each byte + 63.

#include <string>
#include <string_view>
#include <vector>

#include "metricdim/error.hpp"
#include "metricdim/graph.hpp"

namespace metricdim {

inline constexpr int graph6_max_order = 62;

inline std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > graph6_max_order)
    throw limit_exceeded("graph6 short form holds at most 62 vertices, got " + std::to_string(n));
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

/// Trailing '\n' / '\r' are tolerated; anything else after the payload is not.
inline Graph graph6_decode(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw graph6_error(graph6_error::kind::bad_header, "graph6: empty input");
  const int header = static_cast<unsigned char>(text[0]);
  if (header == 126)
    throw graph6_error(graph6_error::kind::bad_header,
                       "graph6: long form (n > 62) is not supported");
  if (header < 63 || header > 63 + graph6_max_order)
    throw graph6_error(graph6_error::kind::bad_header,
                       "graph6: header byte " + std::to_string(header) + " outside [63, 125]");
  const int n = header - 63;
  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t payload = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - 1 < payload)
    throw graph6_error(graph6_error::kind::truncated,
                       "graph6: expected " + std::to_string(payload) + " payload bytes, got " +
                           std::to_string(text.size() - 1));
  if (text.size() - 1 > payload)
    throw graph6_error(graph6_error::kind::trailing_data, "graph6: trailing bytes after payload");

  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  long long k = 0;
  for (std::size_t b = 0; b < payload; ++b) {
    const int byte = static_cast<unsigned char>(text[1 + b]);
    if (byte < 63 || byte > 126)
      throw graph6_error(graph6_error::kind::bad_byte,
                         "graph6: byte " + std::to_string(byte) + " at offset " +
                             std::to_string(1 + b) + " outside [63, 126]");
    const int value = byte - 63;
    for (int bit = 5; bit >= 0; --bit, ++k) {
      if (k >= bits) break;
      if ((value >> bit) & 1) {
        // position k -> column j, row i with k = j(j-1)/2 + i
        int j = 1;
        while (static_cast<long long>(j) * (j + 1) / 2 <= k) ++j;
        const int i = static_cast<int>(k - static_cast<long long>(j) * (j - 1) / 2);
        rows[i].insert(j);
        rows[j].insert(i);
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace metricdim
