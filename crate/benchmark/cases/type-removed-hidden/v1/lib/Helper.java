package lib;

class Helper { }
