package lib;

class S { }
