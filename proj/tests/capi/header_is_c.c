#include "lcdmhd/lcdmhd.h"

int lcdmhd_header_is_c(void) {
  lcdmhd_run_config cfg;
  lcdmhd_run_config_init(&cfg);
  return cfg.problem != NULL;
}
