// Regenerates the bundled CSVs under data/. Output is fixed by the seeds.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // (0, 1], 53 bits
  double uniform() { return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53; }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double t = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n; }

  // Categorical draw from unnormalized weights.
  std::size_t pick(const std::vector<double>& w) {
    double total = 0;
    for (double x : w) total += x;
    double u = uniform() * total;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (u <= w[i]) return i;
      u -= w[i];
    }
    return w.size() - 1;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0;
  bool has_spare_ = false;
};

std::string num(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s = buf;
  if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

double clamp(double v, double lo, double hi) { return std::max(lo, std::min(hi, v)); }

// Lending-style table where the outcome leans on the protected group, directly
// and through proxies (zip_score, district, income).
void synthetic(const std::filesystem::path& path) {
  Rng rng(20190415);
  constexpr std::size_t n = 2000;
  std::vector<int> group(n);
  for (std::size_t i = 0; i < n; ++i) group[i] = i < n / 2 ? 1 : 0;
  rng.shuffle(group);

  const std::vector<std::string> districts{"North", "East", "South", "West", "Centre"};
  const std::vector<std::string> history{"good", "fair", "poor"};
  std::ofstream out(path, std::ios::binary);
  out << "group,zip_score,district,income,education,age,hours,credit,tenure,outcome\n";
  for (std::size_t i = 0; i < n; ++i) {
    const int g = group[i];
    const double zip = 50 + 12 * g + 8 * rng.normal();
    const std::size_t d = rng.pick(g ? std::vector<double>{6, 1, 5, 1, 2} : std::vector<double>{1, 6, 1, 5, 2});
    const double income = 40 + 10 * g + 12 * rng.normal();
    const double education = clamp(14 + 2.5 * rng.normal(), 8, 22);
    const double age = 20 + 50 * rng.uniform();
    const double hours = clamp(40 + 8 * rng.normal(), 10, 70);
    const std::size_t c = rng.pick({5, 3, 2});
    const double tenure = -6 * std::log(rng.uniform());
    const double score = 1.6 * g + 0.45 * (education - 14) + 0.06 * (income - 45) + 0.04 * (hours - 40) +
                         (d == 0 ? 0.6 : 0.0) - 0.5 * static_cast<double>(c) + 0.8 * rng.normal();
    out << (g ? "B" : "A") << ',' << num(zip, 1) << ',' << districts[d] << ',' << num(income, 1)
        << ',' << num(education, 1) << ',' << num(age, 0) << ',' << num(hours, 1) << ',' << history[c] << ','
        << num(tenure, 2) << ',' << num(50 + 10 * score, 2) << '\n';
  }
}

// Player salaries with a free-agency flag, 268 rows.
void players(const std::filesystem::path& path) {
  Rng rng(1992);
  constexpr std::size_t n = 268;
  const std::vector<std::string> positions{"C", "1B", "2B", "SS", "3B", "OF", "DH"};
  std::ofstream out(path, std::ios::binary);
  out << "batting_avg,on_base,runs,hits,doubles,home_runs,rbi,walks,strikeouts,stolen_bases,errors,years,"
         "position,arbitration,free_agent,salary\n";
  for (std::size_t i = 0; i < n; ++i) {
    const double years = std::floor(1 + 14 * std::pow(rng.uniform(), 1.3));
    const bool free_agent = years >= 6 ? rng.uniform() < 0.8 : rng.uniform() < 0.15;
    const bool arbitration = !free_agent && years >= 3 && rng.uniform() < 0.6;
    const double skill = rng.normal();
    const double avg = clamp(0.26 + 0.025 * skill + 0.01 * rng.normal(), 0.18, 0.36);
    const double obp = clamp(avg + 0.07 + 0.02 * rng.normal(), 0.2, 0.45);
    const double games = clamp(110 + 30 * rng.normal(), 20, 162);
    const double hits = std::round(games * 3.6 * avg);
    const double hr = std::max(0.0, std::round(games / 162 * (12 + 8 * skill + 7 * rng.normal())));
    const double doubles = std::round(hits * clamp(0.18 + 0.04 * rng.normal(), 0.05, 0.35));
    const double runs = std::round(hits * 0.5 + hr * 0.6 + 5 * rng.uniform());
    const double rbi = std::round(hits * 0.4 + hr * 1.3 + 6 * rng.uniform());
    const double walks = std::round(games * clamp(0.3 + 0.12 * rng.normal(), 0.05, 0.8));
    const double so = std::round(games * clamp(0.55 + 0.2 * rng.normal(), 0.1, 1.4));
    const double sb = std::max(0.0, std::round(games / 162 * (8 + 9 * rng.normal())));
    const double err = std::max(0.0, std::round(games / 162 * (8 + 4 * rng.normal())));
    const std::size_t pos = rng.below(positions.size());
    const double log_salary = 5.4 + 0.55 * skill + 0.9 * (free_agent ? 1 : 0) + 0.6 * (arbitration ? 1 : 0) +
                              0.04 * years + 0.02 * hr + 0.35 * rng.normal();
    out << num(avg, 3) << ',' << num(obp, 3) << ',' << num(runs, 0) << ',' << num(hits, 0) << ','
        << num(doubles, 0) << ',' << num(hr, 0) << ',' << num(rbi, 0) << ',' << num(walks, 0) << ','
        << num(so, 0) << ',' << num(sb, 0) << ',' << num(err, 0) << ',' << num(years, 0) << ','
        << positions[pos] << ',' << (arbitration ? "yes" : "no") << ',' << (free_agent ? "yes" : "no") << ','
        << num(std::exp(log_salary), 0) << '\n';
  }
}

// Wine quality with a colour control; red wines are the minority.
void wine(const std::filesystem::path& path) {
  Rng rng(3198);
  constexpr std::size_t n = 900;
  std::ofstream out(path, std::ios::binary);
  out << "fixed_acidity,volatile_acidity,citric_acid,residual_sugar,chlorides,free_so2,total_so2,density,ph,"
         "sulphates,alcohol,colour,quality\n";
  for (std::size_t i = 0; i < n; ++i) {
    const bool red = rng.uniform() < 0.4;
    const double fixed = clamp((red ? 8.3 : 6.9) + 1.2 * rng.normal(), 4, 15);
    const double volatile_ = clamp((red ? 0.53 : 0.28) + 0.12 * rng.normal(), 0.08, 1.5);
    const double citric = clamp((red ? 0.27 : 0.33) + 0.12 * rng.normal(), 0, 1);
    const double sugar = red ? clamp(2.5 + 1.0 * rng.normal(), 0.8, 15) : -4 * std::log(rng.uniform()) + 0.8;
    const double chlorides = clamp((red ? 0.085 : 0.045) + 0.015 * rng.normal(), 0.01, 0.3);
    const double free_so2 = clamp((red ? 16 : 35) + 9 * rng.normal(), 2, 120);
    const double total_so2 = clamp(free_so2 * (red ? 2.9 : 3.9) + 20 * rng.normal(), 6, 300);
    const double alcohol = clamp(10.4 + 1.1 * rng.normal(), 8, 14.5);
    const double density = 0.9967 - 0.0012 * (alcohol - 10.4) + 0.0004 * (sugar - 3) + 0.0005 * rng.normal();
    const double ph = clamp((red ? 3.31 : 3.19) + 0.15 * rng.normal(), 2.7, 4);
    const double sulphates = clamp((red ? 0.66 : 0.49) + 0.12 * rng.normal(), 0.2, 2);
    const double latent = 5.8 + 0.38 * (alcohol - 10.4) - 1.6 * (volatile_ - 0.36) + 0.8 * (sulphates - 0.55) +
                          (red ? -0.15 : 0.0) + 0.6 * rng.normal();
    const double quality = clamp(std::round(latent), 3, 9);
    out << num(fixed, 1) << ',' << num(volatile_, 3) << ',' << num(citric, 2) << ',' << num(sugar, 1) << ','
        << num(chlorides, 3) << ',' << num(free_so2, 0) << ',' << num(total_so2, 0) << ',' << num(density, 5)
        << ',' << num(ph, 2) << ',' << num(sulphates, 2) << ',' << num(alcohol, 1) << ','
        << (red ? "red" : "white") << ',' << num(quality, 0) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "data";
  std::filesystem::create_directories(dir);
  synthetic(dir / "synthetic.csv");
  players(dir / "players.csv");
  wine(dir / "wine.csv");
  std::cout << "wrote synthetic.csv, players.csv, wine.csv to " << dir.string() << '\n';
}
