// Copyright 2026 The postfoot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Straight-line transcription of the single-cohort server model in plain
// doubles. Shares no code with the engine; only the inputs are common.

namespace oracle {

struct Method1Inputs {
  double s_net_eib = 33.8465;
  double s_netg_eib = 12.6593;
  double n_node = 250000.0;
  double s_plot_gib = 101.4;
  double s_plot_c5_gib = 81.3;
  double e_plot_std_kwh = 4.995;
  double e_plot_c5_ram_wh = 165.637;
  double e_plot_c5_gpu_wh = 85.968;
  double e_plot_mm_wh = 927.634;
  double e_farm_kwh = 6761.283;
  double pue = 1.58;
  double i_elec = 0.384;
  double t_writes_std_tib = 1.64;
  double t_writes_mm_tib = 1.357;
  double t_writes_bb_tib = 0.084;
  double gamma_ssd = 160.0;
  double gamma_hdd = 20.0;
  double gamma_gpu = 200.0;
  double gamma_enter = 1000.0;
  double tbw_ssd_tib = 2390.15207;
  double l_lifetime = 4.0;
  double f_bb = 0.6;
  double f_mm = 0.3;
  double f_std = 0.1;
  double f_allocation = 0.67;
};

struct Method1Outputs {
  double s_c5_tib, s_mm_tib, s_std_tib;
  double n_plot_c5, n_plot_mm, n_plot_std;
  double n_node_c5, n_node_uncompressed;
  double e_plot_c5_ram_kwh, e_plot_c5_gpu_kwh, e_plot_mm_kwh, e_plot_std_kwh;
  double e_farm_kwh, e_op_kwh;
  double c_elec_t;
  double c_emb_ssd_t, c_emb_gpu_t, c_emb_nogpu_t, c_emb_hdd_t, c_emb_t;
  double c_total_t;
};

inline Method1Outputs method1(const Method1Inputs& in) {
  const double tib_per_eib = 1024.0 * 1024.0;
  const double gib_per_tib = 1024.0;

  Method1Outputs o{};
  const double s_netg = in.s_netg_eib * tib_per_eib;
  const double s_net = in.s_net_eib * tib_per_eib;

  o.s_c5_tib = in.f_bb * s_netg;
  o.s_std_tib = in.f_std * s_netg;
  o.s_mm_tib = in.f_mm * s_netg;

  o.n_plot_c5 = o.s_c5_tib / (in.s_plot_c5_gib / gib_per_tib);
  o.n_plot_mm = o.s_mm_tib / (in.s_plot_gib / gib_per_tib);
  o.n_plot_std = o.s_std_tib / (in.s_plot_gib / gib_per_tib);

  o.n_node_c5 = in.n_node * in.f_bb;
  o.n_node_uncompressed = in.n_node - o.n_node_c5;

  o.e_plot_c5_ram_kwh = o.n_plot_c5 * (in.e_plot_c5_ram_wh / 1000.0) * 0.5 * in.pue;
  o.e_plot_c5_gpu_kwh = o.n_plot_c5 * (in.e_plot_c5_gpu_wh / 1000.0) * 0.5 * in.pue;
  o.e_plot_mm_kwh = o.n_plot_mm * (in.e_plot_mm_wh / 1000.0) * in.pue;
  o.e_plot_std_kwh = o.n_plot_std * in.e_plot_std_kwh * in.pue;

  o.e_farm_kwh = in.n_node * in.e_farm_kwh * in.pue;
  o.e_op_kwh = o.e_plot_c5_ram_kwh + o.e_plot_c5_gpu_kwh + o.e_plot_mm_kwh + o.e_plot_std_kwh + o.e_farm_kwh;

  o.c_elec_t = in.i_elec * o.e_op_kwh / 1000.0;

  const double writes = in.t_writes_std_tib * o.n_plot_std + in.t_writes_mm_tib * o.n_plot_mm +
                        in.t_writes_bb_tib * o.n_plot_c5;
  o.c_emb_ssd_t = writes * in.gamma_ssd / in.tbw_ssd_tib / 1000.0;
  o.c_emb_gpu_t = o.n_node_c5 * (in.gamma_enter + in.gamma_gpu) * in.f_allocation / in.l_lifetime / 1000.0;
  o.c_emb_nogpu_t = o.n_node_uncompressed * in.gamma_enter * in.f_allocation / in.l_lifetime / 1000.0;
  o.c_emb_hdd_t = s_net * in.gamma_hdd / in.l_lifetime / 1000.0;
  o.c_emb_t = o.c_emb_ssd_t + o.c_emb_gpu_t + o.c_emb_nogpu_t + o.c_emb_hdd_t;

  o.c_total_t = o.c_elec_t + o.c_emb_t;
  return o;
}

}  // namespace oracle
