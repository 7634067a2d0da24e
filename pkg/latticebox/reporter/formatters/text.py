from .base import BaseFormatter, Color


class TextFormatter(BaseFormatter):
    def dump_failures(self, failed_checks):
        if len(failed_checks) == 0:
            self.write("\n\nAll checks passed.\n", Color.GREEN)
        else:
            self.write("\nFailures\n", Color.RED)

        for check in failed_checks:
            self.write("\tCheck: {}\n".format(check.name), Color.RED)
            self.write("\tExpected: {}\n".format(check.expected), Color.RED)
            self.write("\tActual: {}\n".format(check.actual), Color.RED)
            self.write("\n", Color.RED)

    def dump_summary(self, summary):
        self.write('\nFinished in {total_time} seconds\n'.format(total_time=summary['total_time']), Color.ENDC)

        color = Color.RED if summary['failed_count'] > 0 else Color.GREEN
        self.write('{check_count} checks, {failed_count} failures\n'.format(
            check_count=summary['check_count'],
            failed_count=summary['failed_count'],
        ), color)
