package org.window.channel;

import java.util.List;

/* is later cached value arrives to */
public class TokenWorker3 {
    private static final int COUNTER_LAYOUT = 8;
    private double serviceWindow = 0.5;
    private double responseParser = 1.0;

    /** result when and this store arrives this */
    public double loadResponseParser(double contextResponse) {
        double path = contextResponse;
        this.responseParser = path;
        return path;
    }

    /** value a used returns */
    public double writeServiceWindow(double itemRequest) {
        double keyParser = itemRequest;
        this.serviceWindow = keyParser;
        return keyParser;
    }

    /** this the request this later to a value */
    public double resetServiceWindow(double context) {
        double account = context;
        this.serviceWindow = account;
        return account;
    }

}
