#include "planbench/fitness/types.hpp"

namespace planbench::fitness {

const char* to_string(Intensity v) {
  switch (v) {
    case Intensity::Low: return "Low";
    case Intensity::Medium: return "Medium";
    case Intensity::High: return "High";
  }
  return "Medium";
}

const char* to_string(Category v) {
  return v == Category::Aerobic ? "Aerobic" : "Anaerobic";
}

const char* to_string(Stamina v) {
  switch (v) {
    case Stamina::Low: return "Low";
    case Stamina::Medium: return "Medium";
    case Stamina::High: return "High";
  }
  return "Medium";
}

Intensity intensity_from_string(const std::string& s) {
  if (s == "Low") return Intensity::Low;
  if (s == "Medium") return Intensity::Medium;
  if (s == "High") return Intensity::High;
  throw std::invalid_argument("unknown intensity: " + s);
}

Category category_from_string(const std::string& s) {
  if (s == "Aerobic") return Category::Aerobic;
  if (s == "Anaerobic") return Category::Anaerobic;
  throw std::invalid_argument("unknown category: " + s);
}

Stamina stamina_from_string(const std::string& s) {
  if (s == "Low") return Stamina::Low;
  if (s == "Medium") return Stamina::Medium;
  if (s == "High") return Stamina::High;
  throw std::invalid_argument("unknown stamina: " + s);
}

}  // namespace planbench::fitness
