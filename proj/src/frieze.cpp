#include "friezelab/frieze.hpp"

#include <algorithm>
#include <sstream>

namespace friezelab {

namespace {

std::string cell_name(int a, int b) {
    std::ostringstream os;
    os << "m(" << a << "," << b << ")";
    return os.str();
}

}  // namespace

Frieze Frieze::from_diagonal_values(int height, const std::map<Diagonal, BigInt>& values) {
    if (height < 1) throw InvalidInput("frieze height must be at least 1");
    const int polygon_size = height + 3;
    if (values.size() != static_cast<std::size_t>(height * polygon_size / 2)) {
        throw MalformedFrieze("a frieze of height " + std::to_string(height) + " needs " +
                              std::to_string(height * polygon_size / 2) + " diagonal values");
    }

    Frieze f;
    f.n_ = height;
    f.grid_ = DenseMatrix<BigInt>::Constant(polygon_size, polygon_size, BigInt(1));
    for (int i = 0; i < polygon_size; ++i) f.grid_(i, i) = 0;
    for (const auto& [d, v] : values) {
        if (!is_diagonal(polygon_size, d)) {
            throw MalformedFrieze("{" + std::to_string(d.a) + "," + std::to_string(d.b) + "} is not a diagonal");
        }
        if (v <= 0) throw NonPositive(cell_name(d.a, d.b) + " = " + v.str() + " is not positive");
        f.grid_(d.a - 1, d.b - 1) = v;
        f.grid_(d.b - 1, d.a - 1) = v;
    }

    for (int a = 1; a <= polygon_size; ++a) {
        for (int b = a + 1; b <= a + height + 1; ++b) {
            if (f.at(a, b) * f.at(a + 1, b + 1) != f.at(a + 1, b) * f.at(a, b + 1) + 1) {
                throw MalformedFrieze("diamond rule fails at " + cell_name(a, b));
            }
        }
    }
    return f;
}

const BigInt& Frieze::at(int a, int b) const {
    if (b - a < 0 || b - a > period()) throw InvalidInput(cell_name(a, b) + " lies outside the frieze");
    return grid_(label_mod(a, period()) - 1, label_mod(b, period()) - 1);
}

QuidditySequence Frieze::quiddity() const {
    QuidditySequence q;
    for (int i = 1; i <= period(); ++i) q.push_back(at(i - 1, i + 1).convert_to<int>());
    return q;
}

std::vector<std::pair<Diagonal, BigInt>> Frieze::domain() const {
    std::vector<std::pair<Diagonal, BigInt>> out;
    for (const auto& d : all_diagonals(period())) out.emplace_back(d, grid_(d.a - 1, d.b - 1));
    return out;
}

Frieze from_quiddity(const QuidditySequence& q) {
    const int polygon_size = static_cast<int>(q.size());
    if (polygon_size < 4) throw InvalidInput("a quiddity sequence needs at least 4 entries");
    const int n = polygon_size - 3;
    for (int i = 1; i <= polygon_size; ++i) {
        if (q[static_cast<std::size_t>(i - 1)] <= 0) {
            throw NonPositive("quiddity entry " + std::to_string(i) + " is not positive");
        }
    }

    // rows[d][a-1] = m(a, a+d) for a = 1..N; every row is N-periodic in a.
    std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n + 3));
    auto row_at = [&](int d, int a) -> const BigInt& {
        return rows[static_cast<std::size_t>(d)][static_cast<std::size_t>(label_mod(a, polygon_size) - 1)];
    };
    rows[1].assign(static_cast<std::size_t>(polygon_size), BigInt(1));
    for (int a = 1; a <= polygon_size; ++a) {
        rows[2].emplace_back(q[static_cast<std::size_t>(label_mod(a + 1, polygon_size) - 1)]);
    }
    for (int d = 2; d <= n + 1; ++d) {
        auto& next = rows[static_cast<std::size_t>(d + 1)];
        for (int a = 1; a <= polygon_size; ++a) {
            const BigInt numerator = row_at(d, a) * row_at(d, a + 1) - 1;
            const BigInt& denominator = row_at(d - 1, a + 1);
            if (numerator % denominator != 0) {
                throw NonInteger(cell_name(a, a + d + 1) + " = " + numerator.str() + "/" + denominator.str() +
                                 " is not an integer");
            }
            next.push_back(numerator / denominator);
            if (next.back() <= 0) {
                throw NonPositive(cell_name(a, a + d + 1) + " = " + next.back().str() + " is not positive");
            }
        }
    }
    for (int a = 1; a <= polygon_size; ++a) {
        if (row_at(n + 2, a) != 1) {
            throw DoesNotClose(cell_name(a, a + n + 2) + " = " + row_at(n + 2, a).str() + ", expected 1");
        }
    }

    std::map<Diagonal, BigInt> values;
    for (int d = 2; d <= n + 1; ++d) {
        for (int a = 1; a <= polygon_size; ++a) {
            const auto [it, fresh] = values.emplace(diagonal_of(polygon_size, a, a + d), row_at(d, a));
            if (!fresh && it->second != row_at(d, a)) {
                throw MalformedFrieze("glide reflection fails at " + cell_name(a, a + d));
            }
        }
    }
    return Frieze::from_diagonal_values(n, values);
}

Frieze from_triangulation(const Triangulation& t) {
    Frieze f = from_quiddity(quiddity(t));
    for (const auto& d : t.diagonals()) {
        if (f.at(d.a, d.b) != 1) throw std::logic_error("frieze is not 1 on a triangulation diagonal");
    }
    return f;
}

Triangulation triangulation_from_quiddity(const QuidditySequence& q) {
    const int polygon_size = static_cast<int>(q.size());
    std::vector<std::pair<int, int>> ring;
    for (int i = 1; i <= polygon_size; ++i) ring.emplace_back(i, q[static_cast<std::size_t>(i - 1)]);

    std::vector<Diagonal> diagonals;
    while (ring.size() > 3) {
        const auto ear = std::find_if(ring.begin(), ring.end(), [](const auto& v) { return v.second == 1; });
        if (ear == ring.end()) throw MalformedFrieze("quiddity sequence has no ear");
        const auto k = ring.size();
        const auto i = static_cast<std::size_t>(ear - ring.begin());
        auto& prev = ring[(i + k - 1) % k];
        auto& next = ring[(i + 1) % k];
        diagonals.emplace_back(prev.first, next.first);
        if (--prev.second < 1 || --next.second < 1) throw MalformedFrieze("ear cutting produced a zero entry");
        ring.erase(ear);
    }
    if (std::any_of(ring.begin(), ring.end(), [](const auto& v) { return v.second != 1; })) {
        throw MalformedFrieze("ear cutting does not end in a triangle");
    }
    return {polygon_size, std::move(diagonals)};
}

Triangulation to_triangulation(const Frieze& f) { return triangulation_from_quiddity(f.quiddity()); }

std::vector<Frieze> enumerate_friezes(int height) {
    if (height < 1) throw InvalidInput("frieze height must be at least 1");
    std::vector<Frieze> out;
    for (const auto& t : enumerate_triangulations(height + 3)) out.push_back(from_triangulation(t));
    return out;
}

std::string render(const Frieze& f, int width) {
    if (width < 1) throw InvalidInput("render width must be positive");
    const int n = f.height();
    std::vector<std::vector<std::string>> rows;
    std::size_t cell = 0;
    for (int r = 0; r <= n + 1; ++r) {
        auto& row = rows.emplace_back();
        for (int j = 0; j < width; ++j) {
            const int a = 1 - r / 2 + j;
            row.push_back(r == 0 || r == n + 1 ? "*1*" : f.at(a, a + r + 1).str());
            cell = std::max(cell, row.back().size() + 1);
        }
    }
    if (cell % 2 == 1) ++cell;

    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r % 2 == 1) out.append(cell / 2, ' ');
        for (const auto& entry : rows[r]) {
            out.append(cell - entry.size(), ' ');
            out += entry;
        }
        out += '\n';
    }
    return out;
}

LightningBolt::LightningBolt(std::vector<BoltCell> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) throw InvalidInput("a lightning bolt needs at least one cell");
    for (std::size_t r = 0; r < cells_.size(); ++r) {
        const auto& c = cells_[r];
        if (c.b - c.a != static_cast<int>(r) + 2) {
            throw InvalidInput("bolt cell for row " + std::to_string(r + 1) + " must satisfy b-a = " +
                               std::to_string(r + 2));
        }
        if (r == 0) continue;
        const auto& p = cells_[r - 1];
        const bool left = c.a == p.a - 1 && c.b == p.b;
        const bool right = c.a == p.a && c.b == p.b + 1;
        if (!left && !right) {
            throw InvalidInput("bolt cells in rows " + std::to_string(r) + " and " + std::to_string(r + 1) +
                               " do not share a diamond");
        }
    }
}

LightningBolt LightningBolt::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw InvalidInput("bolt must look like a:LR...");
    int a = 0;
    try {
        std::size_t used = 0;
        a = std::stoi(text.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("trailing characters");
    } catch (const std::logic_error&) {
        throw InvalidInput("bolt start '" + text.substr(0, colon) + "' is not an integer");
    }
    std::vector<BoltCell> cells{{a, a + 2}};
    for (char c : text.substr(colon + 1)) {
        BoltCell next = cells.back();
        if (c == 'L') {
            --next.a;
        } else if (c == 'R') {
            ++next.b;
        } else {
            throw InvalidInput(std::string("bolt step '") + c + "' is neither L nor R");
        }
        cells.push_back(next);
    }
    return LightningBolt(std::move(cells));
}

std::string LightningBolt::to_string() const {
    std::string out = std::to_string(cells_.front().a) + ":";
    for (std::size_t r = 1; r < cells_.size(); ++r) out += cells_[r].a < cells_[r - 1].a ? 'L' : 'R';
    return out;
}

std::vector<LightningBolt> enumerate_bolts(int height) {
    if (height < 1) throw InvalidInput("bolt height must be at least 1");
    std::vector<LightningBolt> out;
    const unsigned words = 1U << static_cast<unsigned>(height - 1);
    for (int a = 1; a <= height + 3; ++a) {
        for (unsigned w = 0; w < words; ++w) {
            std::string text = std::to_string(a) + ":";
            for (int j = height - 2; j >= 0; --j) text += (w >> static_cast<unsigned>(j)) & 1U ? 'R' : 'L';
            out.push_back(LightningBolt::parse(text));
        }
    }
    return out;
}

Quiver bolt_to_quiver(const LightningBolt& bolt) {
    const auto& cells = bolt.cells();
    std::vector<Arrow> arrows;
    for (int i = 1; i < bolt.height(); ++i) {
        const bool left = cells[static_cast<std::size_t>(i)].a < cells[static_cast<std::size_t>(i - 1)].a;
        arrows.push_back(left ? Arrow{i + 1, i, 1} : Arrow{i, i + 1, 1});
    }
    return Quiver::from_arrows(bolt.height(), arrows);
}

Frieze from_bolt(const LightningBolt& bolt, const std::vector<BigInt>& values) {
    std::vector<Rational> start;
    for (const auto& v : values) {
        if (v <= 0) throw NonPositive("bolt value " + v.str() + " is not positive");
        start.emplace_back(v);
    }
    const auto filled = propagate_bolt(bolt, start, Rational(1),
                                       [](const Rational& num, const Rational& den, const BoltCell& c) {
                                           Rational v = num / den;
                                           if (!is_integer(v)) {
                                               throw NonInteger(cell_name(c.a, c.b) + " = " + v.str() +
                                                                " is not an integer");
                                           }
                                           return v;
                                       });
    std::map<Diagonal, BigInt> integral;
    for (const auto& [d, v] : filled) integral.emplace(d, numerator_of(v));
    return Frieze::from_diagonal_values(bolt.height(), integral);
}

std::map<Diagonal, LaurentPoly> symbolic_from_bolt(const LightningBolt& bolt) {
    const auto n = static_cast<std::size_t>(bolt.height());
    std::vector<LaurentPoly> start;
    for (std::size_t r = 1; r <= n; ++r) start.push_back(LaurentPoly::variable(n, r));
    return propagate_bolt(bolt, start, LaurentPoly::constant(n, BigInt(1)),
                          [](const LaurentPoly& num, const LaurentPoly& den, const BoltCell& c) {
                              try {
                                  return div_exact(num, den);
                              } catch (const NotDivisible& e) {
                                  throw LaurentViolation(cell_name(c.a, c.b) + " is not a Laurent polynomial: " +
                                                         e.what());
                              }
                          });
}

std::vector<BigInt> bolt_values(const Frieze& f, const LightningBolt& bolt) {
    if (bolt.height() != f.height()) throw InvalidInput("bolt height does not match the frieze");
    std::vector<BigInt> out;
    for (const auto& c : bolt.cells()) out.push_back(f.at(c.a, c.b));
    return out;
}

}  // namespace friezelab
