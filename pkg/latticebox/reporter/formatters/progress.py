from .base import Color
from .text import TextFormatter


class ProgressFormatter(TextFormatter):
    def check_started(self, check):
        pass

    def check_passed(self, check):
        self.write('.', Color.GREEN)

    def check_failed(self, check):
        self.write('F', Color.RED)

    def start_dump(self, none_obj):
        pass
