#include "zconvex/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace zconvex {

namespace {

bool valid_profile(const std::vector<Interval>& cols) {
  if (cols.empty()) return false;
  bool bottom_rising = false;
  bool top_falling = false;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i].bottom > cols[i].top) return false;
    if (i == 0) continue;
    const Interval& p = cols[i - 1];
    const Interval& c = cols[i];
    if (std::max(p.bottom, c.bottom) > std::min(p.top, c.top)) return false;
    if (c.bottom > p.bottom) bottom_rising = true;
    else if (c.bottom < p.bottom && bottom_rising) return false;
    if (c.top < p.top) top_falling = true;
    else if (c.top > p.top && top_falling) return false;
  }
  return true;
}

}  // namespace

class ProfileBuilder {
 public:
  ProfileBuilder(int max_sp, int width, const ProfileVisitor& visit)
      : width_(width), max_height_(max_sp - width), visit_(visit) {
    stack_.reserve(static_cast<std::size_t>(width));
  }

  void run(int first_height) {
    if (first_height < 1 || first_height > max_height_) return;
    stack_.push_back({0, first_height - 1});
    extend(0, first_height - 1, false, false);
    stack_.pop_back();
  }

 private:
  void extend(int min_bottom, int max_top, bool bottom_rising, bool top_falling) {
    if (static_cast<int>(stack_.size()) == width_) {
      emit(min_bottom, max_top);
      return;
    }
    const Interval prev = stack_.back();
    // Height cap: the new column may not stretch the bounding box past max_height_.
    int b_lo = max_top - max_height_ + 1;
    const int b_hi = prev.top;
    if (bottom_rising) b_lo = std::max(b_lo, prev.bottom);
    for (int b = b_lo; b <= b_hi; ++b) {
      const int t_lo = std::max(b, prev.bottom);
      int t_hi = std::min(b, min_bottom) + max_height_ - 1;
      if (top_falling) t_hi = std::min(t_hi, prev.top);
      for (int t = t_lo; t <= t_hi; ++t) {
        stack_.push_back({b, t});
        extend(std::min(min_bottom, b), std::max(max_top, t), bottom_rising || b > prev.bottom,
               top_falling || t < prev.top);
        stack_.pop_back();
      }
    }
  }

  void emit(int min_bottom, int /*max_top*/) {
    out_.columns_.resize(stack_.size());
    for (std::size_t i = 0; i < stack_.size(); ++i)
      out_.columns_[i] = {stack_[i].bottom - min_bottom, stack_[i].top - min_bottom};
    visit_(out_);
  }

  int width_;
  int max_height_;
  const ProfileVisitor& visit_;
  std::vector<Interval> stack_;
  ColumnProfile out_;
};

ColumnProfile::ColumnProfile(std::vector<Interval> columns) {
  if (!valid_profile(columns)) throw GridError("column intervals do not form a convex polyomino");
  int lo = std::numeric_limits<int>::max();
  for (const Interval& c : columns) lo = std::min(lo, c.bottom);
  for (Interval& c : columns) {
    c.bottom -= lo;
    c.top -= lo;
  }
  columns_ = std::move(columns);
}

ColumnProfile ColumnProfile::from_polyomino(const Polyomino& p) {
  if (!is_convex(p)) throw GridError("polyomino is not convex");
  std::vector<Interval> cols;
  cols.reserve(static_cast<std::size_t>(p.width()));
  for (int x = 0; x < p.width(); ++x) {
    const Span s = p.column_extent(x);
    cols.push_back({s.low, s.high});
  }
  return ColumnProfile(std::move(cols));
}

int ColumnProfile::height() const {
  int hi = -1;
  for (const Interval& c : columns_) hi = std::max(hi, c.top);
  return hi + 1;
}

Polyomino ColumnProfile::to_polyomino() const {
  std::vector<Cell> cells;
  for (std::size_t x = 0; x < columns_.size(); ++x)
    for (int y = columns_[x].bottom; y <= columns_[x].top; ++y)
      cells.push_back({static_cast<int>(x), y});
  return Polyomino::from_cells(cells);
}

std::vector<CensusPartition> census_partitions(int max_sp) {
  std::vector<CensusPartition> parts;
  for (int w = 1; w < max_sp; ++w)
    for (int h = 1; h <= max_sp - w; ++h) parts.push_back({w, h});
  return parts;
}

void enumerate_partition(int max_sp, const CensusPartition& part, const ProfileVisitor& visit) {
  if (part.width < 1 || part.width >= max_sp) return;
  ProfileBuilder builder(max_sp, part.width, visit);
  builder.run(part.first_column_height);
}

void enumerate_convex_profiles(int max_sp, const ProfileVisitor& visit) {
  if (max_sp < 2) throw CensusError("semi-perimeter bound must be at least 2");
  for (const CensusPartition& part : census_partitions(max_sp)) enumerate_partition(max_sp, part, visit);
}

void enumerate_convex(int max_sp, const PolyominoVisitor& visit) {
  enumerate_convex_profiles(max_sp, [&](const ColumnProfile& prof) { visit(prof.to_polyomino()); });
}

CensusTable census_table(int max_sp, const Classifier& classify, int workers) {
  if (max_sp < 2) throw CensusError("semi-perimeter bound must be at least 2");
  if (workers < 1) throw CensusError("worker count must be positive");
  const std::vector<CensusPartition> parts = census_partitions(max_sp);
  const int n_workers = std::min<int>(workers, static_cast<int>(parts.size()));

  std::vector<CensusTable> local(static_cast<std::size_t>(n_workers));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&](int id) {
    // Counting in machine words first keeps mpz arithmetic out of the hot loop.
    std::map<CensusKey, unsigned long long> counts;
    try {
      for (;;) {
        if (failed.load()) return;
        const std::size_t i = next.fetch_add(1);
        if (i >= parts.size()) break;
        enumerate_partition(max_sp, parts[i], [&](const ColumnProfile& prof) {
          const Polyomino p = prof.to_polyomino();
          std::vector<std::string> labels;
          try {
            labels = classify(p);
          } catch (const std::exception& e) {
            throw CensusError("classifier failed on " + to_json(p) + ": " + e.what());
          }
          CensusKey key{prof.semi_perimeter(), prof.width(), prof.height(), {}};
          for (std::string& label : labels) {
            key.class_label = std::move(label);
            ++counts[key];
          }
        });
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      failed.store(true);
      return;
    }
    CensusTable& out = local[static_cast<std::size_t>(id)];
    for (const auto& [key, n] : counts) out[key] += Integer(std::to_string(n));
  };

  if (n_workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(n_workers));
    for (int id = 0; id < n_workers; ++id) threads.emplace_back(work, id);
    for (std::thread& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);

  CensusTable merged;
  for (const CensusTable& t : local)
    for (const auto& [key, n] : t) merged[key] += n;
  return merged;
}

std::map<int, Integer> totals_by_semiperimeter(const CensusTable& table, const std::string& label) {
  std::map<int, Integer> totals;
  for (const auto& [key, n] : table)
    if (key.class_label == label) totals[key.semiperimeter] += n;
  return totals;
}

std::string to_csv(const CensusTable& table) {
  std::ostringstream os;
  os << "semiperimeter,width,height,class,count\n";
  for (const auto& [key, n] : table)
    os << key.semiperimeter << ',' << key.width << ',' << key.height << ',' << key.class_label << ','
       << n.get_str() << '\n';
  return os.str();
}

CensusTable census_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "semiperimeter,width,height,class,count")
    throw CensusError("census CSV must start with the standard header");
  CensusTable table;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 5) throw CensusError("census CSV line " + std::to_string(line_no) + " needs 5 fields");
    try {
      CensusKey key{std::stoi(fields[0]), std::stoi(fields[1]), std::stoi(fields[2]), fields[3]};
      table[key] += Integer(fields[4]);
    } catch (const std::exception&) {
      throw CensusError("census CSV line " + std::to_string(line_no) + " is malformed");
    }
  }
  return table;
}

std::string to_json(const CensusTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [key, n] : table) {
    nlohmann::ordered_json row;
    row["semiperimeter"] = key.semiperimeter;
    row["width"] = key.width;
    row["height"] = key.height;
    row["class"] = key.class_label;
    if (n.fits_slong_p())
      row["count"] = n.get_si();
    else
      row["count"] = n.get_str();
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json doc;
  doc["rows"] = std::move(rows);
  return doc.dump();
}

}  // namespace zconvex
