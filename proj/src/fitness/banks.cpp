#include "planbench/fitness/banks.hpp"

#include <fstream>
#include <json.hpp>

namespace planbench::fitness {

namespace {

using nlohmann::json;

json to_json(const ExerciseSpec& ex) {
  return json{{"name", ex.name},
              {"duration_minutes", ex.duration_minutes},
              {"intensity", to_string(ex.intensity)},
              {"gym_required", ex.gym_required},
              {"category", to_string(ex.category)},
              {"muscle_groups", ex.muscle_groups}};
}

ExerciseSpec exercise_from_json(const json& j) {
  ExerciseSpec ex;
  ex.name = j.at("name").get<std::string>();
  ex.duration_minutes = j.at("duration_minutes").get<int>();
  if (ex.duration_minutes < 1)
    throw std::invalid_argument("exercise " + ex.name + ": duration must be >= 1");
  ex.intensity = intensity_from_string(j.at("intensity").get<std::string>());
  ex.gym_required = j.at("gym_required").get<bool>();
  ex.category = category_from_string(j.at("category").get<std::string>());
  for (const auto& g : j.at("muscle_groups")) ex.muscle_groups.insert(g.get<std::string>());
  return ex;
}

json to_json(const EmergencyCondition& em) {
  json effect;
  if (const auto* mg = std::get_if<ExcludeMuscleGroup>(&em.effect)) {
    effect = {{"type", "exclude_muscle_group"}, {"group", mg->group}};
  } else if (const auto* rt = std::get_if<ReduceAvailableTime>(&em.effect)) {
    effect = {{"type", "reduce_available_time"}, {"delta_minutes", rt->delta_minutes}};
  } else if (const auto* ex = std::get_if<ExcludeExercise>(&em.effect)) {
    effect = {{"type", "exclude_exercise"}, {"name", ex->name}};
  }
  return json{{"description", em.description}, {"effect", effect}};
}

EmergencyCondition emergency_from_json(const json& j) {
  EmergencyCondition em;
  em.description = j.at("description").get<std::string>();
  const json& effect = j.at("effect");
  const std::string type = effect.at("type").get<std::string>();
  if (type == "exclude_muscle_group") {
    em.effect = ExcludeMuscleGroup{effect.at("group").get<std::string>()};
  } else if (type == "reduce_available_time") {
    const int delta = effect.at("delta_minutes").get<int>();
    if (delta < 1) throw std::invalid_argument("reduce_available_time: delta must be >= 1");
    em.effect = ReduceAvailableTime{delta};
  } else if (type == "exclude_exercise") {
    em.effect = ExcludeExercise{effect.at("name").get<std::string>()};
  } else {
    throw std::invalid_argument("unknown emergency effect type: " + type);
  }
  return em;
}

json to_json(const UserProfile& u) {
  return json{{"name", u.name},
              {"preferences", u.preferences},
              {"available_time_minutes", u.available_time_minutes},
              {"gym_access", u.gym_access},
              {"stamina", to_string(u.stamina)},
              {"max_reps", u.max_reps},
              {"excluded_muscle_groups", u.excluded_muscle_groups}};
}

UserProfile user_from_json(const json& j) {
  UserProfile u;
  u.name = j.at("name").get<std::string>();
  u.preferences = j.at("preferences").get<std::vector<double>>();
  for (double p : u.preferences) {
    if (p < 0.0 || p > 10.0)
      throw std::invalid_argument("user " + u.name + ": preferences must lie in [0, 10]");
  }
  u.available_time_minutes = j.at("available_time_minutes").get<int>();
  u.gym_access = j.at("gym_access").get<bool>();
  u.stamina = stamina_from_string(j.at("stamina").get<std::string>());
  u.max_reps = j.at("max_reps").get<int>();
  for (const auto& g : j.at("excluded_muscle_groups"))
    u.excluded_muscle_groups.insert(g.get<std::string>());
  return u;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

void write_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(4) << '\n';
}

}  // namespace

ExerciseBank default_exercise_bank() {
  return {
      {"Jogging", 30, Intensity::Low, false, Category::Aerobic, {"legs"}},
      {"Cycling", 45, Intensity::Medium, true, Category::Aerobic, {"legs"}},
      {"Swimming", 60, Intensity::High, true, Category::Aerobic, {"back", "shoulders", "legs"}},
      {"Jump Rope", 15, Intensity::High, false, Category::Aerobic, {"legs", "calves"}},
      {"Push-Up", 2, Intensity::Medium, false, Category::Anaerobic, {"chest", "arms", "core"}},
      {"Bench Press", 5, Intensity::High, true, Category::Anaerobic, {"chest", "arms", "shoulders"}},
      {"Shoulder Shrugs", 5, Intensity::Low, false, Category::Anaerobic, {"shoulders", "back"}},
      {"Lunges", 5, Intensity::Medium, false, Category::Anaerobic, {"legs", "glutes"}},
      {"Squats", 5, Intensity::Medium, false, Category::Anaerobic, {"legs", "glutes", "core"}},
      {"Plank", 3, Intensity::Medium, false, Category::Anaerobic, {"core", "back"}},
      {"Sit-Up", 2, Intensity::Low, false, Category::Anaerobic, {"core"}},
      {"Rowing Machine", 20, Intensity::High, true, Category::Aerobic, {"back", "arms", "legs"}},
  };
}

EmergencyBank default_emergency_bank() {
  return {
      {"woke up with back pain after a poor night of sleep", ExcludeMuscleGroup{"back"}},
      {"knees are sore from yesterday's session", ExcludeMuscleGroup{"legs"}},
      {"shoulders feel stiff and painful", ExcludeMuscleGroup{"shoulders"}},
      {"pulled a chest muscle moving furniture", ExcludeMuscleGroup{"chest"}},
      {"sprained a wrist, anything arm-heavy is out", ExcludeMuscleGroup{"arms"}},
      {"a meeting ran long, 15 fewer minutes today", ReduceAvailableTime{15}},
      {"family visiting tonight, 20 fewer minutes today", ReduceAvailableTime{20}},
      {"started late, 10 fewer minutes today", ReduceAvailableTime{10}},
  };
}

std::vector<UserProfile> default_user_bank() {
  // Preference vectors align index-by-index with default_exercise_bank().
  std::vector<UserProfile> users;

  UserProfile joe;
  joe.name = "Joe";
  joe.preferences = {5.0, 4.0, 6.0, 5.0, 5.0, 2.0, 3.0, 4.0, 4.0, 3.0, 3.0, 2.0};
  joe.available_time_minutes = 60;
  joe.gym_access = false;
  joe.stamina = Stamina::Medium;
  joe.max_reps = 5;
  users.push_back(joe);

  UserProfile mara;
  mara.name = "Mara";
  mara.preferences = {3.0, 7.0, 8.0, 4.0, 6.0, 9.0, 2.0, 5.0, 7.0, 5.0, 4.0, 8.0};
  mara.available_time_minutes = 90;
  mara.gym_access = true;
  mara.stamina = Stamina::High;
  mara.max_reps = 4;
  users.push_back(mara);

  UserProfile sam;
  sam.name = "Sam";
  sam.preferences = {6.0, 2.0, 1.0, 7.0, 8.0, 1.0, 5.0, 6.0, 7.0, 6.0, 8.0, 1.0};
  sam.available_time_minutes = 45;
  sam.gym_access = false;
  sam.stamina = Stamina::Low;
  sam.max_reps = 6;
  sam.excluded_muscle_groups = {"back"};
  users.push_back(sam);

  return users;
}

ExerciseBank load_exercise_bank(const std::string& path) {
  const json j = read_file(path);
  ExerciseBank bank;
  std::set<std::string> seen;
  for (const auto& item : j.at("exercises")) {
    ExerciseSpec ex = exercise_from_json(item);
    if (!seen.insert(ex.name).second)
      throw std::invalid_argument("duplicate exercise name: " + ex.name);
    bank.push_back(std::move(ex));
  }
  return bank;
}

EmergencyBank load_emergency_bank(const std::string& path) {
  const json j = read_file(path);
  EmergencyBank bank;
  for (const auto& item : j.at("emergencies")) bank.push_back(emergency_from_json(item));
  return bank;
}

std::vector<UserProfile> load_user_bank(const std::string& path) {
  const json j = read_file(path);
  std::vector<UserProfile> users;
  for (const auto& item : j.at("users")) users.push_back(user_from_json(item));
  return users;
}

void save_exercise_bank(const ExerciseBank& bank, const std::string& path) {
  json arr = json::array();
  for (const auto& ex : bank) arr.push_back(to_json(ex));
  write_file(json{{"exercises", arr}}, path);
}

void save_emergency_bank(const EmergencyBank& bank, const std::string& path) {
  json arr = json::array();
  for (const auto& em : bank) arr.push_back(to_json(em));
  write_file(json{{"emergencies", arr}}, path);
}

void save_user_bank(const std::vector<UserProfile>& users, const std::string& path) {
  json arr = json::array();
  for (const auto& u : users) arr.push_back(to_json(u));
  write_file(json{{"users", arr}}, path);
}

}  // namespace planbench::fitness
