#pragma once

// A 108-rule piloting base in the listing format, shaped like the printed
// fragments: sensor facts feed uncontested assessment chains, a landing
// assessment opens a contested choice of mode, and each mode offers
// mutually exclusive pilot actions. Injecting 4, 5 or 7 sensor facts gives
// 112, 113 or 115 instanced clauses.

#include <string>
#include <vector>

namespace synthetic {

inline const std::vector<std::string>& sensors() {
  static const std::vector<std::string> s{"airspeed_low", "roll_stable",  "altimeter_low",
                                          "variometer_low", "land",       "pitch_stable",
                                          "motor_off"};
  return s;
}

// The first n sensors, except that the 4-fact snapshot drops variometer_low.
inline std::vector<std::string> snapshot(std::size_t n) {
  const auto& s = sensors();
  if (n == 4) return {s[0], s[1], s[2], s[4]};
  return {s.begin(), s.begin() + static_cast<long>(n)};
}

inline std::string facts_text(std::size_t n) {
  std::string out;
  for (const auto& s : snapshot(n)) out += "glider(" + s + ")\n";
  return out;
}

inline std::string glider_listing() {
  std::string out;
  int id = 0;
  auto emit = [&](const char* kind, const std::vector<std::string>& pre, const std::string& head) {
    out += std::to_string(++id) + " p=0,0 " + kind + " : ";
    for (const auto& p : pre) out += p + ", ";
    out += "-> " + head + "\n";
  };
  auto def = [&](const std::vector<std::string>& pre, const std::string& head) { emit("def", pre, head); };
  auto hrd = [&](const std::vector<std::string>& pre, const std::string& head) { emit("hrd", pre, head); };
  auto exclusive = [&](const std::vector<std::string>& group) {
    for (const auto& a : group)
      for (const auto& b : group)
        if (a != b) hrd({a}, "-" + b);
  };

  // Assessment chains: 21 defaults.
  for (const auto& s : sensors()) {
    std::string prev = "glider(" + s + ")";
    for (int step = 1; step <= 3; ++step) {
      std::string next = "glider(" + s + "_" + std::to_string(step) + ")";
      def({prev}, next);
      prev = next;
    }
  }
  def({"glider(land_3)"}, "glider(landing)");

  // Mode choice: 3 defaults, 6 exclusions. Taxiing needs a steady variometer.
  def({"glider(landing)"}, "glider(mode_rest)");
  def({"glider(landing)"}, "glider(mode_takeoff)");
  def({"glider(landing)", "glider(variometer_low_3)"}, "glider(mode_taxi)");
  exclusive({"glider(mode_rest)", "glider(mode_takeoff)", "glider(mode_taxi)"});

  // Actions per mode: 12 defaults.
  def({"glider(mode_rest)"}, "pilot(yoke_p_n)");
  def({"glider(mode_rest)"}, "pilot(yoke_pull)");
  def({"glider(mode_rest)"}, "pilot(yoke_r_n)");
  def({"glider(mode_rest)"}, "pilot(yoke_roll_left)");
  def({"glider(mode_takeoff)"}, "pilot(yoke_pull)");
  def({"glider(mode_takeoff)"}, "pilot(yoke_push)");
  def({"glider(mode_takeoff)"}, "pilot(yoke_p_n)");
  def({"glider(mode_takeoff)"}, "pilot(motor)");
  def({"glider(mode_takeoff)"}, "-pilot(motor)");
  def({"glider(mode_taxi)"}, "pilot(rudder_left)");
  def({"glider(mode_taxi)"}, "pilot(rudder_right)");
  def({"glider(mode_taxi)"}, "pilot(rudder_neutral)");

  // Action exclusions: 14 hard rules.
  exclusive({"pilot(yoke_p_n)", "pilot(yoke_pull)", "pilot(yoke_push)"});
  exclusive({"pilot(yoke_r_n)", "pilot(yoke_roll_left)"});
  exclusive({"pilot(rudder_left)", "pilot(rudder_right)", "pilot(rudder_neutral)"});

  // Effects of each action: 11 defaults.
  for (const char* a : {"yoke_p_n", "yoke_pull", "yoke_push", "yoke_r_n", "yoke_roll_left", "motor",
                        "rudder_left", "rudder_right", "rudder_neutral"})
    def({std::string("pilot(") + a + ")"}, std::string("glider(effect_") + a + ")");
  def({"-pilot(motor)"}, "glider(effect_gliding)");
  def({"glider(effect_motor)", "glider(effect_yoke_pull)"}, "glider(climb_p)");

  // Assessment summaries: 7 hard rules.
  for (const auto& s : sensors()) hrd({"glider(" + s + "_3)"}, "glider(ok_" + s + ")");

  // Rules whose prerequisites no snapshot supplies: 33 defaults.
  for (int k = 0; id < 108; ++k) {
    std::string cond = "glider(state_" + std::to_string(k % 11) + ")";
    std::string extra = "glider(" + sensors()[static_cast<std::size_t>(k) % sensors().size()] + ")";
    def({cond, extra}, "glider(dormant_" + std::to_string(k) + ")");
  }
  return out;
}

}  // namespace synthetic
