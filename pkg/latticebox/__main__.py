import sys
from latticebox.cli import CliParser

def main():
	parser = CliParser()
	sys.exit(parser.parse(sys.argv))

if __name__ == "__main__":
	main()
