from enum import Enum
import sys


class Color(Enum):
    RED = '\033[31m'
    GREEN = '\033[32m'
    YELLOW = '\033[33m'
    BLUE = '\033[34m'
    ENDC = '\033[m'


class BaseFormatter:
    def __init__(self, output=None, color: bool = True):
        self._output = output
        self.color = color

    @property
    def output(self):
        return self._output or sys.stderr

    def write(self, text: str, color: Color):
        if self.color and color is not Color.ENDC:
            self.output.write(color.value)
            self.output.write(text)
            self.output.write(Color.ENDC.value)
        else:
            self.output.write(text)

    def stop(self, none_obj):
        pass
