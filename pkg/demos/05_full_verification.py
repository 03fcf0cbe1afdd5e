"""Running the whole brute-force verification suite in one call.

Every closed form and every statistic-exchanging map is checked against
exhaustive enumeration: counts to n = 12, the four-statistic family to
n = 10, the six-statistic family to n = 9, and the maps to n = 12.
"""

from avoidpair import run_default_suite
from avoidpair.verify import all_passed

reports = run_default_suite()
for report in reports:
    scope = report.pair or "all pairs"
    family = f" family {report.family}" if report.family else ""
    print(f"{report.status:4s}  {report.name} [{scope}{family}] n in {report.n_range}")

print(f"\n{len(reports)} checks, all passed: {all_passed(reports)}")
